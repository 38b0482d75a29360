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

// Wirtinger calculus on grids and the path-integral primitive.
//
// Convention: f_z = (f_u - i f_v)/2, f_zbar = (f_u + i f_v)/2, so
// Laplacian(f) = 4 f_{z zbar} and f is holomorphic iff f_zbar = 0.

#ifndef MTS_CALCULUS_HPP_
#define MTS_CALCULUS_HPP_

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "mts/field.hpp"

namespace mts {

template <class S>
ComplexField wirtinger_dz(const Field<S>& f) {
  return apply_pointwise([](const Jet<S>& a) { return dz(a); }, f);
}

template <class S>
ComplexField wirtinger_dzbar(const Field<S>& f) {
  return apply_pointwise([](const Jet<S>& a) { return dzbar(a); }, f);
}

/// 5-point stencil in the interior (exact derivatives when available).
/// Boundary values of a finite-difference result are flagged untrusted.
RealField laplacian(const RealField& f);

enum class PathOrder { kRowsThenColumns, kColumnsThenRows };

struct PathIntegralResult {
  /// Real primitive F with F_z = E, F(grid origin) = 0.
  RealField primitive;
  /// Max over plaquettes of |circulation of 2 Re(E dz)|.
  double loop_residual = 0.0;
  Index worst_i = 0;
  Index worst_j = 0;
};

/// F = 2 Re of the integral of E dz from the grid origin, accumulated
/// along the first row and then up each column (or the transpose order).
/// Edges are integrated by 8-point Gauss-Legendre when E has an exact
/// provider and by the trapezoid rule otherwise.
PathIntegralResult integrate_primitive(
    const ComplexField& E, PathOrder order = PathOrder::kRowsThenColumns);

/// Per-plaquette circulation of 2 Re(E dz), indexed (i, j) for the cell
/// with lower-left node (i, j). Same quadrature as integrate_primitive.
Eigen::ArrayXXd plaquette_circulation(const ComplexField& E);

namespace detail {

using Complex = std::complex<double>;

// Writes K integrand values at (u, v).
using PointEvaluator = std::function<void(double, double, Complex*)>;

struct RawPrimitive {
  Eigen::ArrayXXd values;
  Eigen::ArrayXXd circulation;
  double loop_residual = 0.0;
  Index worst_i = 0;
  Index worst_j = 0;
};

// Integrates K one-forms 2 Re(E_k dz) sharing one point evaluator, so a
// vector-valued integrand is evaluated once per quadrature point. With no
// evaluator, node values feed the trapezoid rule.
std::vector<RawPrimitive> integrate_forms(
    const Grid2D& grid, int K,
    const std::function<Complex(int, Index, Index)>& node_value,
    const PointEvaluator* evaluator, PathOrder order);

// Exact primitive jet from E's jet: F_u = 2 Re E, F_v = -2 Im E.
inline RealJet primitive_jet(double value, const ComplexJet& e) {
  return RealJet(value, 2.0 * e.v.real(), -2.0 * e.v.imag(),
                 2.0 * e.du.real(), 2.0 * e.dv.real(), -2.0 * e.dv.imag());
}

// Wraps a raw primitive of E into a field carrying E-derived jets.
RealField primitive_field(const Grid2D& grid, Eigen::ArrayXXd values,
                          const std::function<ComplexJet(Index, Index)>& node_e,
                          std::function<ComplexJet(double, double)> point_e,
                          bool exact);

}  // namespace detail

}  // namespace mts

#endif  // MTS_CALCULUS_HPP_
