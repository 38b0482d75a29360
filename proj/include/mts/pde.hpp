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

// Dirichlet problem for the weighted Poisson equation
//   M_uu + M_vv = w (N_uu + N_vv)
// on a grid rectangle, and its use to assemble second-kind data.

#ifndef MTS_PDE_HPP_
#define MTS_PDE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mts/field.hpp"
#include "mts/weierstrass.hpp"

namespace mts {

struct SolverOptions {
  int max_iterations = 20000;
  /// Max-norm target for the interior residual; raised to the roundoff
  /// floor when tighter.
  double residual_target = 1e-10;
};

/// Perimeter nodes counter-clockwise from the origin: bottom row left to
/// right, right column upwards, top row right to left, left column
/// downwards. 2 (n_u + n_v) - 4 entries.
std::vector<std::pair<Index, Index>> perimeter_nodes(const Grid2D& grid);

/// Samples f on the perimeter in perimeter_nodes order.
Eigen::VectorXd boundary_values(const Grid2D& grid,
                                const std::function<double(double, double)>& f);
Eigen::VectorXd boundary_values(const RealField& f);

struct PoissonProblem {
  Grid2D grid;
  RealField weight;
  RealField source;
  /// Dirichlet data for the unknown, in perimeter_nodes order.
  Eigen::VectorXd boundary;
  SolverOptions options;
};

struct PoissonSolution {
  RealField solution;
  /// max over interior nodes of |Delta_h M - w Delta_h N|.
  double residual = 0.0;
  /// Target actually used: max(options target, floor).
  double target = 0.0;
  /// Roundoff floor of the residual evaluation.
  double floor = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Set when the requested target is below the floor.
  std::optional<std::string> warning;
};

/// 5-point discretization with right-hand side w Delta_h N, solved by
/// preconditioned conjugate gradients. Throws std::invalid_argument on
/// shape errors; non-convergence is reported, not thrown.
PoissonSolution solve_weighted_poisson(const PoissonProblem& problem);

/// 5-point Laplacian at interior nodes (zero on the boundary).
Eigen::ArrayXXd discrete_laplacian(const RealField& f);

struct AssembledSecond {
  WeierstrassSecond data;
  PoissonSolution solve;
  ValidationReport validation;
  bool valid() const { return solve.converged && validation.passed(); }
};

/// Solves for M with w = Re h and validates (h, M, N). N is stored as
/// samples so that its second differences match the discrete right-hand
/// side. Throws SolverError if the solver does not converge.
AssembledSecond assemble_second_kind(const ComplexField& h, const RealField& N,
                                     const Eigen::VectorXd& boundary_M,
                                     const SolverOptions& options = {},
                                     const std::optional<Tolerances>& tol = {});

}  // namespace mts

#endif  // MTS_PDE_HPP_
