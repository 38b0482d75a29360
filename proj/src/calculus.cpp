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

#include "mts/calculus.hpp"

#include <cmath>
#include <limits>

namespace mts {

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace

RealField laplacian(const RealField& f) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  RealField out = apply_pointwise(
      [nan](const RealJet& a) {
        return RealJet(a.duu + a.dvv, nan, nan, nan, nan, nan);
      },
      f);
  out.set_boundary_trusted(f.exact());
  return out;
}

namespace detail {

std::vector<RawPrimitive> integrate_forms(
    const Grid2D& grid, int K,
    const std::function<Complex(int, Index, Index)>& node_value,
    const PointEvaluator* evaluator, PathOrder order) {
  const Index nu = grid.n_u();
  const Index nv = grid.n_v();
  // eu(k)(i, j): edge (i, j) -> (i + 1, j); ev(k)(i, j): (i, j) -> (i, j + 1).
  std::vector<Eigen::ArrayXXd> eu(K, Eigen::ArrayXXd(nu - 1, nv));
  std::vector<Eigen::ArrayXXd> ev(K, Eigen::ArrayXXd(nu, nv - 1));
  std::vector<Complex> buf(K);
  std::vector<double> acc(K);

  auto edge = [&](double u0, double v0, double du, double dv, auto store) {
    // 2 Re(E dz) along the segment, dz = du + i dv.
    const Complex dzeta(du, dv);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
      const double t = 0.5 * (kGaussNodes[q] + 1.0);
      (*evaluator)(u0 + t * du, v0 + t * dv, buf.data());
      for (int k = 0; k < K; ++k) {
        acc[k] += kGaussWeights[q] * (buf[k] * dzeta).real();
      }
    }
    for (int k = 0; k < K; ++k) store(k, acc[k]);  // 2 * (1/2) weights
  };

  for (Index j = 0; j < nv; ++j) {
    for (Index i = 0; i + 1 < nu; ++i) {
      if (evaluator != nullptr) {
        edge(grid.u(i), grid.v(j), grid.u(i + 1) - grid.u(i), 0.0,
             [&](int k, double x) { eu[k](i, j) = x; });
      } else {
        const double du = grid.u(i + 1) - grid.u(i);
        for (int k = 0; k < K; ++k) {
          eu[k](i, j) =
              du * (node_value(k, i, j) + node_value(k, i + 1, j)).real();
        }
      }
    }
  }
  for (Index j = 0; j + 1 < nv; ++j) {
    for (Index i = 0; i < nu; ++i) {
      if (evaluator != nullptr) {
        edge(grid.u(i), grid.v(j), 0.0, grid.v(j + 1) - grid.v(j),
             [&](int k, double x) { ev[k](i, j) = x; });
      } else {
        const double dv = grid.v(j + 1) - grid.v(j);
        // 2 Re(E i dv) = -2 Im(E) dv.
        for (int k = 0; k < K; ++k) {
          ev[k](i, j) =
              -dv * (node_value(k, i, j) + node_value(k, i, j + 1)).imag();
        }
      }
    }
  }

  std::vector<RawPrimitive> out(K);
  for (int k = 0; k < K; ++k) {
    RawPrimitive& r = out[k];
    r.values = Eigen::ArrayXXd::Zero(nu, nv);
    if (order == PathOrder::kRowsThenColumns) {
      CompensatedSum row;
      for (Index i = 1; i < nu; ++i) {
        row.add(eu[k](i - 1, 0));
        r.values(i, 0) = row.value();
      }
      for (Index i = 0; i < nu; ++i) {
        CompensatedSum col;
        col.add(r.values(i, 0));
        for (Index j = 1; j < nv; ++j) {
          col.add(ev[k](i, j - 1));
          r.values(i, j) = col.value();
        }
      }
    } else {
      CompensatedSum col;
      for (Index j = 1; j < nv; ++j) {
        col.add(ev[k](0, j - 1));
        r.values(0, j) = col.value();
      }
      for (Index j = 0; j < nv; ++j) {
        CompensatedSum row;
        row.add(r.values(0, j));
        for (Index i = 1; i < nu; ++i) {
          row.add(eu[k](i - 1, j));
          r.values(i, j) = row.value();
        }
      }
    }
    r.circulation.resize(nu - 1, nv - 1);
    r.loop_residual = 0.0;
    for (Index j = 0; j + 1 < nv; ++j) {
      for (Index i = 0; i + 1 < nu; ++i) {
        const double c =
            eu[k](i, j) + ev[k](i + 1, j) - eu[k](i, j + 1) - ev[k](i, j);
        r.circulation(i, j) = c;
        if (std::abs(c) > r.loop_residual || c != c) {
          r.loop_residual = c != c ? std::numeric_limits<double>::quiet_NaN()
                                   : std::abs(c);
          r.worst_i = i;
          r.worst_j = j;
        }
      }
    }
  }
  return out;
}

RealField primitive_field(const Grid2D& grid, Eigen::ArrayXXd values,
                          const std::function<ComplexJet(Index, Index)>& node_e,
                          std::function<ComplexJet(double, double)> point_e,
                          bool exact) {
  auto jets = std::make_shared<RealField::NodeJets>(grid.size());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      (*jets)[i + grid.n_u() * j] = primitive_jet(values(i, j), node_e(i, j));
    }
  }
  RealField::Provider provider;
  if (point_e) {
    // Off-grid values would need a path integral per call; only the
    // derivatives are provided there.
    provider = [point_e = std::move(point_e)](double u, double v) {
      return primitive_jet(std::numeric_limits<double>::quiet_NaN(),
                           point_e(u, v));
    };
  }
  return RealField(grid, std::move(values), std::move(provider), std::move(jets),
                   exact);
}

}  // namespace detail

PathIntegralResult integrate_primitive(const ComplexField& E, PathOrder order) {
  const Grid2D& grid = E.grid();
  const auto node = [&](int, Index i, Index j) { return E(i, j); };
  detail::PointEvaluator eval;
  if (E.has_provider()) {
    eval = [&E](double u, double v, detail::Complex* out) {
      out[0] = E.provider()(u, v).v;
    };
  }
  auto raw = detail::integrate_forms(grid, 1, node,
                                     E.has_provider() ? &eval : nullptr, order);
  std::function<ComplexJet(double, double)> point_e;
  if (E.has_provider()) point_e = E.provider();
  PathIntegralResult result;
  result.primitive = detail::primitive_field(
      grid, std::move(raw[0].values),
      [&E](Index i, Index j) { return E.jet(i, j); }, std::move(point_e),
      E.exact());
  result.loop_residual = raw[0].loop_residual;
  result.worst_i = raw[0].worst_i;
  result.worst_j = raw[0].worst_j;
  return result;
}

Eigen::ArrayXXd plaquette_circulation(const ComplexField& E) {
  const auto node = [&](int, Index i, Index j) { return E(i, j); };
  detail::PointEvaluator eval;
  if (E.has_provider()) {
    eval = [&E](double u, double v, detail::Complex* out) {
      out[0] = E.provider()(u, v).v;
    };
  }
  auto raw = detail::integrate_forms(E.grid(), 1, node,
                                     E.has_provider() ? &eval : nullptr,
                                     PathOrder::kRowsThenColumns);
  return raw[0].circulation;
}

}  // namespace mts
