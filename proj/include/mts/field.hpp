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

// Grid-sampled real and complex fields.
//
// A field always stores its node values. It may additionally carry an
// exact jet provider (closed form at arbitrary points) and/or precomputed
// node jets (exact derivatives propagated by the product rule). Without
// either, derivatives come from second-order finite differences.

#ifndef MTS_FIELD_HPP_
#define MTS_FIELD_HPP_

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mts/errors.hpp"
#include "mts/grid.hpp"
#include "mts/jet.hpp"

namespace mts {

template <class S>
class Field {
 public:
  using Scalar = S;
  using JetType = Jet<S>;
  using Array = Eigen::Array<S, Eigen::Dynamic, Eigen::Dynamic>;
  using Provider = std::function<Jet<S>(double, double)>;
  using NodeJets = std::vector<Jet<S>>;

  Field() = default;

  /// Sampled-only field.
  Field(const Grid2D& grid, Array values)
      : grid_(grid), values_(std::move(values)) {
    check_shape();
  }

  Field(const Grid2D& grid, Array values, Provider provider,
        std::shared_ptr<const NodeJets> node_jets, bool exact)
      : grid_(grid),
        values_(std::move(values)),
        provider_(std::move(provider)),
        node_jets_(std::move(node_jets)),
        exact_(exact) {
    check_shape();
    if (node_jets_ && static_cast<Index>(node_jets_->size()) != grid_.size()) {
      throw std::invalid_argument("node jet count does not match grid");
    }
  }

  /// Samples an exact provider at the nodes.
  static Field from_provider(const Grid2D& grid, Provider provider) {
    Array values(grid.n_u(), grid.n_v());
    for (Index j = 0; j < grid.n_v(); ++j) {
      for (Index i = 0; i < grid.n_u(); ++i) {
        values(i, j) = provider(grid.u(i), grid.v(j)).v;
      }
    }
    return Field(grid, std::move(values), std::move(provider), nullptr, true);
  }

  static Field constant(const Grid2D& grid, S c) {
    return from_provider(grid, [c](double, double) { return Jet<S>(c); });
  }

  const Grid2D& grid() const { return grid_; }
  const Array& values() const { return values_; }
  S operator()(Index i, Index j) const { return values_(i, j); }

  bool has_provider() const { return static_cast<bool>(provider_); }
  const Provider& provider() const { return provider_; }
  bool has_node_jets() const { return static_cast<bool>(node_jets_); }

  /// True when derivatives at every node (boundary included) are exact up
  /// to roundoff rather than finite-difference estimates.
  bool exact() const { return exact_; }

  /// False for derived quantities whose boundary values came from one-sided
  /// stencils; norms then skip the boundary.
  bool boundary_trusted() const { return boundary_trusted_; }
  Field& set_boundary_trusted(bool trusted) {
    boundary_trusted_ = trusted;
    return *this;
  }

  Jet<S> jet(Index i, Index j) const {
    if (node_jets_) return (*node_jets_)[i + grid_.n_u() * j];
    if (provider_) {
      Jet<S> r = provider_(grid_.u(i), grid_.v(j));
      r.v = values_(i, j);
      return r;
    }
    return finite_difference_jet(i, j);
  }

  /// Exact jet at an arbitrary point; requires a provider.
  Jet<S> jet_at(double u, double v) const {
    if (!provider_) throw std::logic_error("field has no exact provider");
    return provider_(u, v);
  }

  /// Drops provider and node jets; derivatives fall back to differences.
  Field sampled() const { return Field(grid_, values_); }

  Jet<S> finite_difference_jet(Index i, Index j) const;

 private:
  void check_shape() const {
    if (values_.rows() != grid_.n_u() || values_.cols() != grid_.n_v()) {
      throw std::invalid_argument("field values do not match grid shape");
    }
  }

  Grid2D grid_;
  Array values_ = Array::Zero(3, 3);
  Provider provider_;
  std::shared_ptr<const NodeJets> node_jets_;
  bool exact_ = false;
  bool boundary_trusted_ = true;
};

using RealField = Field<double>;
using ComplexField = Field<std::complex<double>>;

namespace detail {

// Second-order first derivative at position k of an n-point line.
template <class S, class Get>
S fd_first(Get f, Index k, Index n, double h) {
  if (k == 0) return (S(-3) * f(0) + S(4) * f(1) - f(2)) / S(2 * h);
  if (k == n - 1) {
    return (S(3) * f(n - 1) - S(4) * f(n - 2) + f(n - 3)) / S(2 * h);
  }
  return (f(k + 1) - f(k - 1)) / S(2 * h);
}

// Second derivative; edges use the four-point one-sided rule when n >= 4.
template <class S, class Get>
S fd_second(Get f, Index k, Index n, double h) {
  const S h2 = S(h * h);
  if (k == 0) {
    if (n >= 4) return (S(2) * f(0) - S(5) * f(1) + S(4) * f(2) - f(3)) / h2;
    return (f(0) - S(2) * f(1) + f(2)) / h2;
  }
  if (k == n - 1) {
    if (n >= 4) {
      return (S(2) * f(n - 1) - S(5) * f(n - 2) + S(4) * f(n - 3) - f(n - 4)) /
             h2;
    }
    return (f(n - 1) - S(2) * f(n - 2) + f(n - 3)) / h2;
  }
  return (f(k - 1) - S(2) * f(k) + f(k + 1)) / h2;
}

}  // namespace detail

template <class S>
Jet<S> Field<S>::finite_difference_jet(Index i, Index j) const {
  const Index nu = grid_.n_u();
  const Index nv = grid_.n_v();
  const double hu = grid_.h_u();
  const double hv = grid_.h_v();
  auto along_u = [&](Index jj) { return [&, jj](Index ii) { return values_(ii, jj); }; };
  auto along_v = [&](Index ii) { return [&, ii](Index jj) { return values_(ii, jj); }; };
  Jet<S> r;
  r.v = values_(i, j);
  r.du = detail::fd_first<S>(along_u(j), i, nu, hu);
  r.dv = detail::fd_first<S>(along_v(i), j, nv, hv);
  r.duu = detail::fd_second<S>(along_u(j), i, nu, hu);
  r.dvv = detail::fd_second<S>(along_v(i), j, nv, hv);
  auto dv_at = [&](Index ii) { return detail::fd_first<S>(along_v(ii), j, nv, hv); };
  r.duv = detail::fd_first<S>(dv_at, i, nu, hu);
  return r;
}

/// Builds an exact field from a formula over (u, v) jets, e.g.
/// `make_field(grid, [](auto u, auto v) { return sinh(u) * sin(u); })`.
template <class Formula>
auto make_field(const Grid2D& grid, Formula formula) {
  using R = decltype(formula(RealJet::variable_u(0.0), RealJet::variable_v(0.0)));
  using S = typename R::Scalar;
  return Field<S>::from_provider(grid, [formula](double u, double v) {
    return Jet<S>(formula(RealJet::variable_u(u), RealJet::variable_v(v)));
  });
}

/// Evaluates a jet formula node by node. Node jets are kept, so the output
/// inherits exact derivatives from exact inputs; a provider is composed when
/// every input has one.
template <class Formula, class... S>
auto apply_pointwise(Formula formula, const Field<S>&... in) {
  using Out = decltype(formula(std::declval<Jet<S>>()...));
  using R = typename Out::Scalar;
  static_assert(sizeof...(S) > 0, "apply_pointwise needs at least one field");
  const Grid2D& grid = std::get<0>(std::tie(in...)).grid();
  (require_same_grid(grid, in.grid(), "apply_pointwise"), ...);

  typename Field<R>::Array values(grid.n_u(), grid.n_v());
  auto jets = std::make_shared<typename Field<R>::NodeJets>(grid.size());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      const Jet<R> r = formula(in.jet(i, j)...);
      values(i, j) = r.v;
      (*jets)[i + grid.n_u() * j] = r;
    }
  }
  typename Field<R>::Provider provider;
  if ((in.has_provider() && ...)) {
    provider = [formula, ps = std::make_tuple(in.provider()...)](double u,
                                                                double v) {
      return std::apply(
          [&](const auto&... p) { return Jet<R>(formula(p(u, v)...)); }, ps);
    };
  }
  const bool exact = (in.exact() && ...);
  return Field<R>(grid, std::move(values), std::move(provider), std::move(jets),
                  exact);
}

/// Where a sup or min is taken.
enum class Region { kAll, kInterior };

struct Extremum {
  double value = 0.0;
  Index i = 0;
  Index j = 0;
};

/// max of metric(i, j) over the region; NaN entries win so they surface.
template <class Metric>
Extremum max_over(const Grid2D& grid, Region region, Metric metric) {
  Extremum e{-std::numeric_limits<double>::infinity(), 0, 0};
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      if (region == Region::kInterior && !grid.is_interior(i, j)) continue;
      const double m = metric(i, j);
      if (m > e.value || m != m) {
        e = {m, i, j};
        if (m != m) return e;
      }
    }
  }
  return e;
}

template <class Metric>
Extremum min_over(const Grid2D& grid, Region region, Metric metric) {
  Extremum e = max_over(grid, region, [&](Index i, Index j) { return -metric(i, j); });
  e.value = -e.value;
  return e;
}

/// Interior unless the field's boundary values are trusted.
template <class S>
Region trusted_region(const Field<S>& f) {
  return f.boundary_trusted() ? Region::kAll : Region::kInterior;
}

template <class S>
Extremum sup_norm(const Field<S>& f, Region region) {
  using std::abs;
  return max_over(f.grid(), region, [&](Index i, Index j) { return abs(f(i, j)); });
}

template <class S>
Extremum sup_norm(const Field<S>& f) {
  return sup_norm(f, trusted_region(f));
}

/// Region used for derivative-based checks: the whole grid when derivatives
/// are exact, otherwise the interior.
inline Region check_region(bool exact) {
  return exact ? Region::kAll : Region::kInterior;
}

}  // namespace mts

#endif  // MTS_FIELD_HPP_
