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

#include "mts/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mts {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

template <class Formula>
RealField4 coordinates(const Grid2D& grid, Formula x) {
  return {make_field(grid, [x](auto u, auto v) { return x(u, v)[0]; }),
          make_field(grid, [x](auto u, auto v) { return x(u, v)[1]; }),
          make_field(grid, [x](auto u, auto v) { return x(u, v)[2]; }),
          make_field(grid, [x](auto u, auto v) { return x(u, v)[3]; })};
}

LorentzVector4 at_origin(const RealField4& X) {
  return LorentzVector4(X[0](0, 0), X[1](0, 0), X[2](0, 0), X[3](0, 0));
}

ComplexField exp_iz(const Grid2D& grid) {
  return make_field(grid, [](auto u, auto v) {
    return exp(kI * (ComplexJet(u) + kI * ComplexJet(v)));
  });
}

// Catenoid cousin and its hyperbolic counterpart.
template <class J>
std::array<J, 4> x_zero(const J& u, const J& v) {
  return {sinh(u) * sin(u), sinh(u) * cos(u), cosh(u) * sinh(v), cosh(u) * cosh(v)};
}
template <class J>
std::array<J, 4> x_half_pi(const J& u, const J& v) {
  return {-(cos(u) * cos(v)), sin(u) * cos(v), cosh(v) * sin(v), sinh(v) * sin(v)};
}

}  // namespace

Fixture fixture_sigma_theta(double theta, const Grid2D& grid) {
  if (!(theta >= 0.0 && theta <= kPi / 2 + 1e-15)) {
    throw DomainError("sigma-theta: theta must lie in [0, pi/2]");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  auto factor = [c, s](double u, double v) { return c * std::cosh(u) + s * std::cos(v); };

  // The factor is separable, so its exact range over the rectangle follows
  // from the ranges of cosh u and cos v; a zero between nodes is caught too.
  const double u_near = grid.u_min() > 0.0   ? grid.u_min()
                        : grid.u_max() < 0.0 ? grid.u_max()
                                             : 0.0;
  const double u_far = std::max(std::abs(grid.u_min()), std::abs(grid.u_max()));
  auto contains_multiple = [&](double offset) {
    const double k = std::ceil((grid.v_min() - offset) / (2.0 * kPi));
    return offset + 2.0 * kPi * k <= grid.v_max();
  };
  double v_low = std::cos(grid.v_min()) < std::cos(grid.v_max()) ? grid.v_min() : grid.v_max();
  double v_high = std::cos(grid.v_min()) < std::cos(grid.v_max()) ? grid.v_max() : grid.v_min();
  double cos_lo = std::cos(v_low);
  double cos_hi = std::cos(v_high);
  if (contains_multiple(kPi)) {
    cos_lo = -1.0;
    v_low = kPi + 2.0 * kPi * std::ceil((grid.v_min() - kPi) / (2.0 * kPi));
  }
  if (contains_multiple(0.0)) {
    cos_hi = 1.0;
    v_high = 2.0 * kPi * std::ceil(grid.v_min() / (2.0 * kPi));
  }
  const double lo = c * std::cosh(u_near) + s * cos_lo;
  const double hi = c * std::cosh(u_far) + s * cos_hi;
  if (!(lo > 1e-6 || hi < -1e-6)) {
    // lo <= 0 <= hi up to the margin: bisect for a zero along the path
    // (u_near, v_low) -> (u_near, v_high) -> (u_far, v_high).
    double au = u_near, av = v_low, bu = u_near, bv = v_high;
    if (factor(u_near, v_low) * factor(u_near, v_high) > 0.0) {
      au = u_near, av = v_high, bu = u_far, bv = v_high;
    }
    // A touching zero (|lo| within the margin) has no sign change to bisect.
    if (std::abs(lo) <= 1e-6) au = bu = u_near, av = bv = v_low;
    for (int it = 0; it < 60 && (au != bu || av != bv); ++it) {
      const double mu = 0.5 * (au + bu), mv = 0.5 * (av + bv);
      if (factor(au, av) * factor(mu, mv) <= 0.0) {
        bu = mu, bv = mv;
      } else {
        au = mu, av = mv;
      }
    }
    const double wu = 0.5 * (au + bu);
    const double wv = 0.5 * (av + bv);
    std::ostringstream os;
    os << "sigma-theta: grid leaves the admissible domain, condition "
          "cos(theta) cosh u + sin(theta) cos v != 0 fails near (u,v) = ("
       << wu << ", " << wv << ") for theta = " << theta;
    throw DomainError(os.str());
  }

  Fixture f;
  f.name = "sigma-theta";
  f.kind = FixtureKind::kSecondKind;
  f.parameters = {{"theta", theta}};
  f.grid = grid;
  f.second = WeierstrassSecond{
      exp_iz(grid),
      make_field(grid, [c, s](auto u, auto v) {
        return c * (sinh(u) * sin(u)) - s * (cos(u) * cos(v));
      }),
      make_field(grid, [c, s](auto u, auto v) {
        return exp(v) * (c * cosh(u) + s * sin(v));
      }),
      Provenance{"sigma-theta", "", theta}};
  f.X = coordinates(grid, [c, s](auto u, auto v) {
    const auto a = x_zero(u, v);
    const auto b = x_half_pi(u, v);
    return std::array{c * a[0] + s * b[0], c * a[1] + s * b[1],
                      c * a[2] + s * b[2], c * a[3] + s * b[3]};
  });
  f.anchor = at_origin(f.X);
  f.quadric_constant = -std::cos(2.0 * theta);
  f.conformal_factor = [factor](double u, double v) {
    const double x = factor(u, v);
    return x * x;
  };
  f.nonvanishing_H = true;
  return f;
}

Grid2D recommended_grid_sigma_theta(double theta, Index n) {
  if (std::abs(theta - kPi / 4) < 1e-12) return Grid2D(0.1, 3.0, -3.0, 3.0, n, n);
  if (theta < kPi / 4) return Grid2D(-2.0, 2.0, -2.0, 2.0, n, n);
  return Grid2D(-2.0, 2.0, -1.4, 1.4, n, n);
}

Fixture fixture_two_parameter(double alpha, double beta, const Grid2D& grid) {
  if (!(alpha * alpha + beta * beta < 1.0)) {
    std::ostringstream os;
    os << "two-param: requires alpha^2 + beta^2 < 1, got "
       << alpha * alpha + beta * beta;
    throw DomainError(os.str());
  }
  Fixture f;
  f.name = "two-param";
  f.kind = FixtureKind::kSecondKind;
  f.parameters = {{"alpha", alpha}, {"beta", beta}};
  f.grid = grid;
  f.second = WeierstrassSecond{
      exp_iz(grid),
      make_field(grid, [alpha, beta](auto u, auto v) {
        return alpha * u + beta * v + sinh(u) * sin(u);
      }),
      make_field(grid, [](auto u, auto v) { return exp(v) * cosh(u); }),
      Provenance{"two-param", "", 0.0}};
  f.X = coordinates(grid, [alpha, beta](auto u, auto v) {
    const auto x0 = x_zero(u, v);
    const auto e = exp(-v);
    return std::array{alpha * u + beta * v + x0[0], alpha * v - beta * u + x0[1],
                      -alpha * (e * sin(u)) + beta * (e * cos(u)) + x0[2],
                      alpha * (e * sin(u)) - beta * (e * cos(u)) + x0[3]};
  });
  f.anchor = at_origin(f.X);
  f.conformal_factor = [alpha, beta](double u, double v) {
    const double a = alpha + std::cosh(u) * std::sin(u);
    const double b = -beta + std::cosh(u) * std::cos(u);
    (void)v;
    return a * a + b * b;
  };
  f.nonvanishing_H = true;
  return f;
}

Fixture fixture_classical(ClassicalSurface which, const Grid2D& grid) {
  Fixture f;
  f.kind = FixtureKind::kExplicitPatch;
  f.grid = grid;
  if (which == ClassicalSurface::kCatenoidR3) {
    f.name = "catenoid";
    f.X = coordinates(grid, [](auto u, auto v) {
      using J = decltype(u);
      return std::array<J, 4>{cosh(u) * sin(v), cosh(u) * cos(v), u, J(0.0)};
    });
    f.conformal_factor = [](double u, double) { return std::cosh(u) * std::cosh(u); };
  } else {
    if (!(grid.v_min() > -kPi / 2 && grid.v_max() < kPi / 2)) {
      throw DomainError("hyperbolic-catenoid: requires v in (-pi/2, pi/2)");
    }
    f.name = "hyperbolic-catenoid";
    f.X = coordinates(grid, [](auto u, auto v) {
      using J = decltype(u);
      return std::array<J, 4>{J(0.0), v, cos(v) * sinh(u), cos(v) * cosh(u)};
    });
    f.conformal_factor = [](double, double v) { return std::cos(v) * std::cos(v); };
  }
  f.anchor = at_origin(f.X);
  return f;
}

namespace {

double param(const std::map<std::string, double>& p, const std::string& key,
             double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

Fixture fixture_by_name(const std::string& name,
                        const std::map<std::string, double>& parameters,
                        const Grid2D& grid) {
  if (name == "sigma-theta") {
    return fixture_sigma_theta(param(parameters, "theta", 0.0), grid);
  }
  if (name == "two-param") {
    return fixture_two_parameter(param(parameters, "alpha", 0.0),
                                 param(parameters, "beta", 0.0), grid);
  }
  if (name == "catenoid") return fixture_classical(ClassicalSurface::kCatenoidR3, grid);
  if (name == "hyperbolic-catenoid") {
    return fixture_classical(ClassicalSurface::kHyperbolicCatenoidL3, grid);
  }
  throw std::invalid_argument("unknown fixture '" + name +
                              "' (sigma-theta, two-param, catenoid, hyperbolic-catenoid)");
}

Grid2D recommended_grid(const std::string& name,
                        const std::map<std::string, double>& parameters, Index n) {
  if (name == "sigma-theta") {
    return recommended_grid_sigma_theta(param(parameters, "theta", 0.0), n);
  }
  if (name == "hyperbolic-catenoid") return Grid2D(-2.0, 2.0, -1.4, 1.4, n, n);
  return Grid2D(-2.0, 2.0, -2.0, 2.0, n, n);
}

}  // namespace mts
