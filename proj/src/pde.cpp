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

#include "mts/pde.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>

namespace mts {

std::vector<std::pair<Index, Index>> perimeter_nodes(const Grid2D& grid) {
  const Index nu = grid.n_u();
  const Index nv = grid.n_v();
  std::vector<std::pair<Index, Index>> out;
  out.reserve(2 * (nu + nv) - 4);
  for (Index i = 0; i < nu; ++i) out.emplace_back(i, 0);
  for (Index j = 1; j < nv; ++j) out.emplace_back(nu - 1, j);
  for (Index i = nu - 2; i >= 0; --i) out.emplace_back(i, nv - 1);
  for (Index j = nv - 2; j >= 1; --j) out.emplace_back(0, j);
  return out;
}

Eigen::VectorXd boundary_values(const Grid2D& grid,
                                const std::function<double(double, double)>& f) {
  const auto nodes = perimeter_nodes(grid);
  Eigen::VectorXd b(static_cast<Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    b(static_cast<Index>(k)) = f(grid.u(nodes[k].first), grid.v(nodes[k].second));
  }
  return b;
}

Eigen::VectorXd boundary_values(const RealField& f) {
  const auto nodes = perimeter_nodes(f.grid());
  Eigen::VectorXd b(static_cast<Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    b(static_cast<Index>(k)) = f(nodes[k].first, nodes[k].second);
  }
  return b;
}

Eigen::ArrayXXd discrete_laplacian(const RealField& f) {
  const Grid2D& g = f.grid();
  const double cu = 1.0 / (g.h_u() * g.h_u());
  const double cv = 1.0 / (g.h_v() * g.h_v());
  Eigen::ArrayXXd out = Eigen::ArrayXXd::Zero(g.n_u(), g.n_v());
  for (Index j = 1; j + 1 < g.n_v(); ++j) {
    for (Index i = 1; i + 1 < g.n_u(); ++i) {
      out(i, j) = cu * (f(i - 1, j) - 2.0 * f(i, j) + f(i + 1, j)) +
                  cv * (f(i, j - 1) - 2.0 * f(i, j) + f(i, j + 1));
    }
  }
  return out;
}

PoissonSolution solve_weighted_poisson(const PoissonProblem& problem) {
  const Grid2D& grid = problem.grid;
  require_same_grid(grid, problem.weight.grid(), "solve_weighted_poisson");
  require_same_grid(grid, problem.source.grid(), "solve_weighted_poisson");
  const auto perimeter = perimeter_nodes(grid);
  if (problem.boundary.size() != static_cast<Index>(perimeter.size())) {
    throw std::invalid_argument("boundary data has " +
                                std::to_string(problem.boundary.size()) +
                                " entries, grid perimeter has " +
                                std::to_string(perimeter.size()));
  }
  const Index nu = grid.n_u();
  const Index nv = grid.n_v();
  const Index mu = nu - 2;
  const Index n = mu * (nv - 2);
  const double cu = 1.0 / (grid.h_u() * grid.h_u());
  const double cv = 1.0 / (grid.h_v() * grid.h_v());

  Eigen::ArrayXXd m = Eigen::ArrayXXd::Zero(nu, nv);
  for (std::size_t k = 0; k < perimeter.size(); ++k) {
    m(perimeter[k].first, perimeter[k].second) = problem.boundary(static_cast<Index>(k));
  }
  const Eigen::ArrayXXd lap_n = discrete_laplacian(problem.source);

  // Unknown (i, j) interior maps to (i - 1) + mu (j - 1). The system is
  // -Delta_h M = -w Delta_h N, which is symmetric positive definite.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(5 * n));
  Eigen::VectorXd rhs(n);
  for (Index j = 1; j + 1 < nv; ++j) {
    for (Index i = 1; i + 1 < nu; ++i) {
      const Index row = (i - 1) + mu * (j - 1);
      double b = -problem.weight(i, j) * lap_n(i, j);
      triplets.emplace_back(row, row, 2.0 * cu + 2.0 * cv);
      const Index ni[4] = {i - 1, i + 1, i, i};
      const Index nj[4] = {j, j, j - 1, j + 1};
      const double c[4] = {cu, cu, cv, cv};
      for (int q = 0; q < 4; ++q) {
        if (grid.is_interior(ni[q], nj[q])) {
          triplets.emplace_back(row, (ni[q] - 1) + mu * (nj[q] - 1), -c[q]);
        } else {
          b += c[q] * m(ni[q], nj[q]);
        }
      }
      rhs(row) = b;
    }
  }
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::IncompleteCholesky<double>>
      cg;
  cg.setMaxIterations(problem.options.max_iterations);
  cg.setTolerance(std::numeric_limits<double>::epsilon());
  cg.compute(A);
  if (cg.info() != Eigen::Success) {
    throw SolverError("solve_weighted_poisson: preconditioner factorization failed");
  }
  Eigen::VectorXd x = cg.solve(rhs);
  int iterations = static_cast<int>(cg.iterations());

  auto scatter = [&](const Eigen::VectorXd& sol) {
    for (Index j = 1; j + 1 < nv; ++j) {
      for (Index i = 1; i + 1 < nu; ++i) m(i, j) = sol((i - 1) + mu * (j - 1));
    }
  };
  auto interior_residual = [&]() {
    double r = 0.0;
    for (Index j = 1; j + 1 < nv; ++j) {
      for (Index i = 1; i + 1 < nu; ++i) {
        const double lap_m = cu * (m(i - 1, j) - 2.0 * m(i, j) + m(i + 1, j)) +
                             cv * (m(i, j - 1) - 2.0 * m(i, j) + m(i, j + 1));
        const double d = std::abs(lap_m - problem.weight(i, j) * lap_n(i, j));
        if (d > r || d != d) r = d;
      }
    }
    return r;
  };
  scatter(x);

  PoissonSolution out;
  // Evaluating Delta_h M cancels terms of size (4/h^2) max|M|.
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = m.abs().maxCoeff() + 1.0;
  out.floor = 8.0 * eps * (2.0 * cu + 2.0 * cv) * scale +
              8.0 * eps * (problem.weight.values() * lap_n).abs().maxCoeff();
  out.target = std::max(problem.options.residual_target, out.floor);
  if (problem.options.residual_target < out.floor) {
    std::ostringstream os;
    os << "residual target " << problem.options.residual_target
       << " is below the roundoff floor " << out.floor << "; using the floor";
    out.warning = os.str();
  }
  out.residual = interior_residual();
  // A few rounds of residual correction remove the CG stopping error.
  for (int round = 0; round < 3 && !(out.residual <= out.target); ++round) {
    const Eigen::VectorXd r = rhs - A * x;
    const Eigen::VectorXd dx = cg.solve(r);
    iterations += static_cast<int>(cg.iterations());
    x += dx;
    scatter(x);
    out.residual = interior_residual();
  }
  out.iterations = iterations;
  out.converged = out.residual <= out.target;
  out.solution = RealField(grid, std::move(m));
  return out;
}

AssembledSecond assemble_second_kind(const ComplexField& h, const RealField& N,
                                     const Eigen::VectorXd& boundary_M,
                                     const SolverOptions& options,
                                     const std::optional<Tolerances>& tol) {
  require_same_grid(h.grid(), N.grid(), "assemble_second_kind");
  const Grid2D& grid = h.grid();
  const RealField n_samples = N.sampled();
  Eigen::ArrayXXd w(grid.n_u(), grid.n_v());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) w(i, j) = h(i, j).real();
  }
  PoissonProblem problem{grid, RealField(grid, std::move(w)), n_samples, boundary_M,
                         options};
  AssembledSecond out;
  out.solve = solve_weighted_poisson(problem);
  if (!out.solve.converged) {
    std::ostringstream os;
    os << "assemble_second_kind: solver stopped at residual " << out.solve.residual
       << " above target " << out.solve.target << " after "
       << out.solve.iterations << " iterations";
    throw SolverError(os.str());
  }
  out.data = WeierstrassSecond{h, out.solve.solution, n_samples,
                               Provenance{"poisson", "assemble_second_kind", 0.0}};
  out.validation = validate_second(out.data, tol);
  return out;
}

}  // namespace mts
