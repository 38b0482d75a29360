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

#include <cmath>
#include <complex>

#include "doctest.h"
#include "mts/calculus.hpp"
#include "mts/field.hpp"

namespace {

using mts::Grid2D;
using mts::Index;
using mts::RealField;
using mts::RealJet;

RealField sampled_test_function(const Grid2D& g) {
  return mts::make_field(g, [](auto u, auto v) { return sin(2.0 * u) * exp(v) + cos(u * v); })
      .sampled();
}

// Max interior error of each FD derivative against the exact jet.
std::array<double, 5> fd_errors(Index n) {
  const Grid2D g(-1.0, 1.0, -0.5, 1.5, n, n);
  const RealField exact =
      mts::make_field(g, [](auto u, auto v) { return sin(2.0 * u) * exp(v) + cos(u * v); });
  const RealField fd = exact.sampled();
  std::array<double, 5> err{};
  for (Index j = 1; j + 1 < n; ++j) {
    for (Index i = 1; i + 1 < n; ++i) {
      const RealJet a = exact.jet(i, j);
      const RealJet b = fd.jet(i, j);
      const double d[5] = {a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv,
                           a.dvv - b.dvv};
      for (int k = 0; k < 5; ++k) err[k] = std::max(err[k], std::abs(d[k]));
    }
  }
  return err;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("grid construction and spec round trip") {
  const Grid2D g(-2, 2, -1, 3, 5, 9);
  CHECK(g.h_u() == 1.0);
  CHECK(g.h_v() == 0.5);
  CHECK(g.u(4) == 2.0);
  CHECK(g.v(8) == 3.0);
  CHECK(Grid2D::parse(g.spec()) == g);
  CHECK(Grid2D::parse("-2:2:-2:2:129x129").n_u() == 129);
  CHECK_THROWS_AS(Grid2D(0, 1, 0, 1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D(1, 0, 0, 1, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::parse("0:1:0:1"), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::parse("0:1:0:1:4by4"), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::parse("0:1:0:x:4x4"), std::invalid_argument);
}

TEST_CASE("fields reject mismatched shapes and grids") {
  const Grid2D g(0, 1, 0, 1, 4, 4);
  CHECK_THROWS_AS(RealField(g, Eigen::ArrayXXd::Zero(3, 4)), std::invalid_argument);
  const RealField a = RealField::constant(g, 1.0);
  const RealField b = RealField::constant(Grid2D(0, 1, 0, 2, 4, 4), 1.0);
  CHECK_THROWS_AS(mts::apply_pointwise([](auto x, auto y) { return x + y; }, a, b),
                  mts::GridMismatch);
}

TEST_CASE("providers, node jets and sampling") {
  const Grid2D g(0, 1, 0, 1, 5, 5);
  const RealField f = mts::make_field(g, [](auto u, auto v) { return u * u * v; });
  CHECK(f.has_provider());
  CHECK(f.exact());
  CHECK(f(4, 4) == 1.0);
  const RealJet j = f.jet_at(0.5, 2.0);
  CHECK(j.v == 0.5);
  CHECK(j.duu == 4.0);
  CHECK(j.duv == 1.0);

  const RealField s = f.sampled();
  CHECK_FALSE(s.has_provider());
  CHECK_FALSE(s.exact());
  CHECK_THROWS(s.jet_at(0.1, 0.1));

  // Composition keeps exactness and builds a provider.
  const RealField p = mts::apply_pointwise([](const RealJet& a) { return a * a; }, f);
  CHECK(p.exact());
  CHECK(p.has_provider());
  CHECK(p.jet_at(0.5, 2.0).v == 0.25);
  const RealField q = mts::apply_pointwise([](const RealJet& a, const RealJet& b) { return a * b; },
                                           f, s);
  CHECK_FALSE(q.exact());
  CHECK_FALSE(q.has_provider());
}

TEST_CASE("finite differences are exact on quadratics") {
  const Grid2D g(-1, 2, 0, 1, 4, 7);
  const RealField f =
      mts::make_field(g, [](auto u, auto v) { return 3.0 * u * u - 2.0 * u * v + v * v + u; })
          .sampled();
  for (Index j = 0; j < g.n_v(); ++j) {
    for (Index i = 0; i < g.n_u(); ++i) {
      const RealJet a = f.jet(i, j);
      CHECK(a.du == doctest::Approx(6 * g.u(i) - 2 * g.v(j) + 1).epsilon(1e-12));
      CHECK(a.dv == doctest::Approx(-2 * g.u(i) + 2 * g.v(j)).epsilon(1e-12));
      CHECK(a.duu == doctest::Approx(6).epsilon(1e-10));
      CHECK(a.duv == doctest::Approx(-2).epsilon(1e-10));
      CHECK(a.dvv == doctest::Approx(2).epsilon(1e-10));
    }
  }
}

TEST_CASE("finite differences converge at second order") {
  const auto coarse = fd_errors(41);
  const auto fine = fd_errors(81);
  for (int k = 0; k < 5; ++k) {
    const double ratio = coarse[k] / fine[k];
    CAPTURE(k);
    CAPTURE(ratio);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
  }
}

TEST_CASE("extrema helpers respect the region") {
  const Grid2D g(0, 1, 0, 1, 5, 5);
  const RealField f = mts::make_field(g, [](auto u, auto v) { return u + v; });
  CHECK(mts::sup_norm(f, mts::Region::kAll).value == 2.0);
  CHECK(mts::sup_norm(f, mts::Region::kInterior).value == 1.5);
  const auto m = mts::min_over(g, mts::Region::kInterior,
                               [&](Index i, Index j) { return f(i, j); });
  CHECK(m.value == 0.5);
  CHECK(m.i == 1);
  CHECK(m.j == 1);
  RealField s = sampled_test_function(g);
  CHECK(mts::trusted_region(s) == mts::Region::kAll);
  s.set_boundary_trusted(false);
  CHECK(mts::trusted_region(s) == mts::Region::kInterior);
}

}  // TEST_SUITE
