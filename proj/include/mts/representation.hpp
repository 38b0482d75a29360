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

// The three Weierstrass representations, producing conformal patches
// X: Omega -> L^4, with metric factor, mean curvature vector, Gauss map,
// the Liu decomposition and congruence checks.

#ifndef MTS_REPRESENTATION_HPP_
#define MTS_REPRESENTATION_HPP_

#include <array>
#include <optional>
#include <string>

#include "mts/field.hpp"
#include "mts/lorentz.hpp"
#include "mts/report.hpp"
#include "mts/weierstrass.hpp"

namespace mts {

enum class RepresentationKind { kFirst, kSecond, kThird, kExplicit };

const char* to_string(RepresentationKind kind);

using RealField4 = std::array<RealField, 4>;
using ComplexField4 = std::array<ComplexField, 4>;

struct SurfacePatch {
  Grid2D grid;
  RealField4 X;
  ComplexField4 Xz;
  /// Complex on purpose: its imaginary part is the integrability defect.
  ComplexField4 Xzzbar;
  /// Lambda in ds^2 = Lambda (du^2 + dv^2), from the representation's
  /// closed form (explicit patches: 2 <X_z, conj X_z>).
  RealField conformal_factor;
  /// H = (4 / Lambda) Re X_{z zbar}.
  RealField4 H;
  /// Null normal field; absent for explicit patches.
  std::optional<RealField4> gauss_map;
  /// Invariant residuals, each with its threshold.
  Report checks;
  double loop_residual = 0.0;
  /// Threshold used for the checks.
  double tol = 1e-8;
  /// Derivatives exact at every node; otherwise checks run on the interior.
  bool exact = false;
  RepresentationKind kind = RepresentationKind::kExplicit;
  Provenance provenance;

  LorentzVector4 x(Index i, Index j) const;
  ComplexVector4 xz(Index i, Index j) const;
  ComplexVector4 xzzbar(Index i, Index j) const;
  LorentzVector4 h(Index i, Index j) const;
  /// Region for derivative-based checks.
  Region region() const { return check_region(exact); }
};

struct RepresentOptions {
  /// X at the grid origin; zero when absent.
  std::optional<LorentzVector4> anchor;
  /// Patch invariant threshold; 1e-8 exact, 100 h^2 otherwise.
  std::optional<double> tol;
  /// Tolerances for validating the input data.
  std::optional<Tolerances> data_tol;
};

/// Default patch threshold for a grid.
double default_patch_tol(const Grid2D& grid, bool exact);

/// X_z = P_z (1/g, i/g, 1, 1) + Q_z (g, -ig, -1, 1).
/// Throws ValidationError for invalid data and IntegrationError when the
/// loop residual of X exceeds the patch threshold.
SurfacePatch represent_first(const WeierstrassFirst& data,
                             const RepresentOptions& options = {});

/// X_z = M_z (1, -i, -h, h) + N_z (0, ih, (1+h^2)/2, (1-h^2)/2).
SurfacePatch represent_second(const WeierstrassSecond& data,
                              const RepresentOptions& options = {});

/// X_z = A_z ((1/g-g)/2, i(1/g+g)/2, 1, 0) + B_z ((1/g+g)/2, i(1/g-g)/2, 0, 1).
/// Preconditions use the weight (|g|^2 - 1)/(|g|^2 + 1).
SurfacePatch represent_third(const ComplexField& g, const RealField& A,
                             const RealField& B,
                             const RepresentOptions& options = {});

/// Preconditions of represent_third, as a validation report.
ValidationReport validate_third(const ComplexField& g, const RealField& A,
                                const RealField& B,
                                const std::optional<Tolerances>& tol = {});

/// Patch from given coordinate fields (closed form or samples). X_z and
/// X_{z zbar} come from the fields' jets.
SurfacePatch patch_from_coordinates(const RealField4& X,
                                    std::optional<double> tol = {});

struct MeanCurvatureReport {
  RealField4 H;
  /// sup |<H,H>| / (1 + |H|^2) with |.| Euclidean.
  Extremum null_defect;
  Extremum min_norm;
  Extremum max_norm;
};

/// Throws DomainError where Lambda <= 0.
MeanCurvatureReport mean_curvature(const SurfacePatch& patch);

struct LiuData {
  ComplexField psi;
  ComplexField f1;
  ComplexField f2;
  /// (1) Psi_zbar real, (2) (Psi f1 f2)_zbar real,
  /// (3) (Psi f1)_zbar = conj((Psi f2)_zbar), (4) (f1)_zbar (f2)_zbar = 0.
  Extremum condition1;
  Extremum condition2;
  Extremum condition3;
  Extremum condition4;
  /// |X_z - Psi (f1+f2, -i(f1-f2), 1-f1 f2, 1+f1 f2)|, conformality in
  /// disguise.
  Extremum reconstruction;
  Extremum min_abs_psi;
  /// Nodes skipped because |Psi| <= eps.
  Index masked = 0;
  double eps = 1e-6;
};

/// Conditions and reconstruction are evaluated where |Psi| > eps on the
/// patch's check region. f1 and f2 are NaN where |Psi| <= eps.
LiuData liu_decompose(const SurfacePatch& patch, double eps = 1e-6);

struct CongruenceReport {
  /// sup over nodes of |T - mean(T)|, T = rot X_A - X_B.
  double residual = 0.0;
  Index i = 0;
  Index j = 0;
  LorentzVector4 translation = LorentzVector4::Zero();
  double tol = 1e-6;
  bool passed = false;
};

CongruenceReport verify_congruence(const SurfacePatch& a, const SurfacePatch& b,
                                   const LorentzRotation& rot,
                                   double tol = 1e-6);

/// <X, X> - c per node.
RealField quadric_residual(const SurfacePatch& patch, double c);

}  // namespace mts

#endif  // MTS_REPRESENTATION_HPP_
