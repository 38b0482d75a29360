// Copyright 2026 The mts Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Weierstrass data of the first kind (g, P, Q) and second kind (h, M, N):
// validators, the equivalence transformations, and the three deformations.

#ifndef MTS_WEIERSTRASS_HPP_
#define MTS_WEIERSTRASS_HPP_

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "mts/calculus.hpp"
#include "mts/errors.hpp"
#include "mts/field.hpp"
#include "mts/report.hpp"

namespace mts {

struct Provenance {
  /// Identifier of the data this was derived from (fixture name, file).
  std::string source;
  /// Transformation or deformation family that produced it, or empty.
  std::string family;
  double parameter = 0.0;
};

/// g holomorphic and nowhere zero; P_{z zbar} = |g|^2 Q_{z zbar};
/// P_z - |g|^2 Q_z nowhere zero.
struct WeierstrassFirst {
  ComplexField g;
  RealField P;
  RealField Q;
  Provenance provenance;

  const Grid2D& grid() const { return g.grid(); }
  bool exact() const { return g.exact() && P.exact() && Q.exact(); }
};

/// h holomorphic and nowhere zero; M_{z zbar} = Re(h) N_{z zbar};
/// M_z - Re(h) N_z nowhere zero.
struct WeierstrassSecond {
  ComplexField h;
  RealField M;
  RealField N;
  Provenance provenance;

  const Grid2D& grid() const { return h.grid(); }
  bool exact() const { return h.exact() && M.exact() && N.exact(); }
};

struct Tolerances {
  double tol_holo = 1e-8;
  double tol_pde = 1e-8;
  /// Pointwise lower bounds certified over the grid.
  double eps_zero = 1e-6;
  double eps_immersion = 1e-6;
  /// Loop residual accepted from a path-integral primitive.
  double tol_loop = 1e-8;
  /// Residual accepted for the identities a transformation guarantees.
  double tol_identity = 1e-8;

  /// 1e-8 everywhere with exact derivatives. Otherwise 50 h^2 for the
  /// holomorphy and PDE residuals and 100 h^2 for loop and identity.
  static Tolerances defaults(const Grid2D& grid, bool exact);
};

using ValidationReport = Report;

class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : Error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Common shape of every validator: f holomorphic and nowhere zero,
/// A_{z zbar} = w(f) B_{z zbar} on the interior, A_z - w(f) B_z nowhere zero.
ValidationReport validate_weighted(
    const ComplexField& f, const RealField& A, const RealField& B,
    const std::function<double(std::complex<double>)>& weight,
    const Tolerances& tol);

/// Checks "nonvanishing", "holomorphic", "pde" (interior) and "immersion".
ValidationReport validate_first(const WeierstrassFirst& data,
                                const std::optional<Tolerances>& tol = {});
ValidationReport validate_second(const WeierstrassSecond& data,
                                 const std::optional<Tolerances>& tol = {});

/// Output of a transformation together with the evidence for it.
template <class Data>
struct Transformed {
  Data data;
  /// Loop residual of the primitive that was integrated (0 if none).
  double loop_residual = 0.0;
  /// Sup over the grid of the transformation's defining identity.
  double identity_residual = 0.0;
  ValidationReport validation;
};

/// h = 1/g, N = 2P, M_z = P_z/g + g Q_z. Throws ValidationError on invalid
/// input and IntegrationError when the loop residual exceeds tol_loop.
Transformed<WeierstrassSecond> first_to_second(
    const WeierstrassFirst& data, const std::optional<Tolerances>& tol = {});

/// g = 1/h, P = N/2, Q_z = h M_z - (h^2/2) N_z.
Transformed<WeierstrassFirst> second_to_first(
    const WeierstrassSecond& data, const std::optional<Tolerances>& tol = {});

/// g_l = g/(1 + i l g), P_l = P, Q_l,z = (1/g + i l)(g Q_z - i l P_z).
/// Throws DomainError when min |1 + i l g| <= eps_zero at a node or when
/// 1 + i l g winds around some grid cell.
Transformed<WeierstrassFirst> deform_parabolic(
    const WeierstrassFirst& data, double lambda,
    const std::optional<Tolerances>& tol = {});

/// h_t = e^{-it} h, N_t = N, M_t,z = e^{it} M_z - i sin(t) h N_z.
Transformed<WeierstrassSecond> deform_elliptic(
    const WeierstrassSecond& data, double tau,
    const std::optional<Tolerances>& tol = {});

/// (e^eta g, e^eta P, e^-eta Q).
Transformed<WeierstrassFirst> deform_hyperbolic(
    const WeierstrassFirst& data, double eta,
    const std::optional<Tolerances>& tol = {});

/// sup |(M_z - Re h N_z) + (P_z - |g|^2 Q_z)/conj(g)|, the identity both
/// equivalence transformations satisfy.
Extremum equivalence_identity_residual(const WeierstrassFirst& first,
                                       const WeierstrassSecond& second);

/// sup |(a - a(origin)) - (b - b(origin))|.
template <class S>
double anchored_difference(const Field<S>& a, const Field<S>& b,
                           Region region = Region::kAll) {
  require_same_grid(a.grid(), b.grid(), "anchored_difference");
  using std::abs;
  const S a0 = a(0, 0);
  const S b0 = b(0, 0);
  return max_over(a.grid(), region, [&](Index i, Index j) {
           return abs((a(i, j) - a0) - (b(i, j) - b0));
         }).value;
}

/// sup |a - b|.
template <class S>
double max_difference(const Field<S>& a, const Field<S>& b,
                      Region region = Region::kAll) {
  require_same_grid(a.grid(), b.grid(), "max_difference");
  using std::abs;
  return max_over(a.grid(), region,
                  [&](Index i, Index j) { return abs(a(i, j) - b(i, j)); })
      .value;
}

}  // namespace mts

#endif  // MTS_WEIERSTRASS_HPP_
