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

namespace {

using mts::ComplexField;
using mts::ComplexJet;
using mts::Grid2D;
using mts::Index;
using mts::RealField;
using mts::RealJet;
using C = std::complex<double>;
const C kI(0.0, 1.0);

template <class F>
ComplexField complex_field(const Grid2D& g, F f) {
  return mts::make_field(g, [f](auto u, auto v) {
    const ComplexJet z = ComplexJet(u) + kI * ComplexJet(v);
    return f(z);
  });
}

double max_abs_diff(const ComplexField& a, const std::function<C(double, double)>& f,
                    mts::Region region = mts::Region::kAll) {
  return mts::max_over(a.grid(), region, [&](Index i, Index j) {
           return std::abs(a(i, j) - f(a.grid().u(i), a.grid().v(j)));
         }).value;
}

double laplacian_error(Index n) {
  const Grid2D g(-1, 1, -1, 1, n, n);
  const RealField f =
      mts::make_field(g, [](auto u, auto v) { return sinh(u) * sin(u) + 0.0 * v; }).sampled();
  const RealField l = mts::laplacian(f);
  return mts::max_over(g, mts::trusted_region(l), [&](Index i, Index j) {
           return std::abs(l(i, j) - 2 * std::cosh(g.u(i)) * std::cos(g.u(i)));
         }).value;
}

double trapezoid_primitive_error(Index n) {
  // E = e^z/2 is holomorphic, so 2 Re of its primitive is e^u cos v.
  const Grid2D g(-1, 1, -1, 1, n, n);
  const ComplexField e = complex_field(g, [](const ComplexJet& z) { return 0.5 * exp(z); }).sampled();
  const auto r = mts::integrate_primitive(e);
  const double f0 = std::exp(-1.0) * std::cos(-1.0);
  return mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
           return std::abs(r.primitive(i, j) -
                           (std::exp(g.u(i)) * std::cos(g.v(j)) - f0));
         }).value;
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("wirtinger derivatives of z, zbar and e^{iz}") {
  const Grid2D g(-1, 1, -1, 1, 17, 17);
  const ComplexField z = complex_field(g, [](const ComplexJet& w) { return w; });
  CHECK(max_abs_diff(mts::wirtinger_dz(z), [](double, double) { return C(1); }) == 0.0);
  CHECK(max_abs_diff(mts::wirtinger_dzbar(z), [](double, double) { return C(0); }) == 0.0);
  // Linear functions are differenced exactly, boundary included.
  CHECK(max_abs_diff(mts::wirtinger_dz(z.sampled()), [](double, double) { return C(1); }) <
        1e-13);

  const ComplexField zbar = complex_field(g, [](const ComplexJet& w) { return conj(w); });
  CHECK(max_abs_diff(mts::wirtinger_dzbar(zbar), [](double, double) { return C(1); }) == 0.0);

  const ComplexField e = complex_field(g, [](const ComplexJet& w) { return exp(kI * w); });
  CHECK(max_abs_diff(mts::wirtinger_dz(e), [](double u, double v) {
          return kI * std::exp(kI * C(u, v));
        }) < 1e-14);
  CHECK(max_abs_diff(mts::wirtinger_dzbar(e), [](double, double) { return C(0); }) < 1e-15);
  const double h2 = g.h_max() * g.h_max();
  CHECK(max_abs_diff(mts::wirtinger_dzbar(e.sampled()), [](double, double) { return C(0); }) <
        2 * std::exp(1.0) * h2);
}

TEST_CASE("wirtinger derivatives of real functions") {
  const Grid2D g(-1, 2, -1, 1, 21, 15);
  const RealField r = mts::make_field(g, [](auto u, auto v) { return u * u + v * v; });
  // f_z = (2u - 2iv)/2 = zbar.
  CHECK(max_abs_diff(mts::wirtinger_dz(r), [](double u, double v) { return C(u, -v); }) <
        1e-15);
  const RealField s = mts::make_field(g, [](auto u, auto v) { return sinh(u) * sin(u) + 0.0 * v; });
  CHECK(max_abs_diff(mts::wirtinger_dzbar(s), [](double u, double) {
          return C(0.5 * (std::cosh(u) * std::sin(u) + std::sinh(u) * std::cos(u)));
        }) < 1e-15);
}

TEST_CASE("dz + dzbar recovers f_u") {
  const Grid2D g(-1, 1, -1, 1, 11, 11);
  const RealField f = mts::make_field(g, [](auto u, auto v) { return exp(v) * cosh(u) * sin(u * v); });
  const ComplexField a = mts::wirtinger_dz(f);
  const ComplexField b = mts::wirtinger_dzbar(f);
  for (Index j = 0; j < g.n_v(); ++j) {
    for (Index i = 0; i < g.n_u(); ++i) {
      CHECK(std::abs(a(i, j) + b(i, j) - f.jet(i, j).du) < 1e-14);
    }
  }
}

TEST_CASE("laplacian examples") {
  const Grid2D g(-2, 2, -2, 2, 33, 33);
  const RealField a = mts::make_field(g, [](auto u, auto v) { return sinh(u) * sin(u) + 0.0 * v; });
  const RealField la = mts::laplacian(a);
  CHECK(la.boundary_trusted());
  CHECK(mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
          return std::abs(la(i, j) - 2 * std::cosh(g.u(i)) * std::cos(g.u(i)));
        }).value < 1e-13);

  const RealField b = mts::make_field(g, [](auto u, auto v) { return exp(v) * cosh(u); });
  const RealField lb = mts::laplacian(b);
  CHECK(mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
          return std::abs(lb(i, j) - 2 * std::exp(g.v(j)) * std::cosh(g.u(i)));
        }).value < 1e-12);

  const RealField c = RealField(g, Eigen::ArrayXXd::Constant(33, 33, 4.2));
  const RealField lc = mts::laplacian(c);
  CHECK_FALSE(lc.boundary_trusted());
  CHECK(mts::sup_norm(lc).value < 1e-10);
}

TEST_CASE("FD laplacian converges at second order on the interior") {
  const double ratio = laplacian_error(33) / laplacian_error(65);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("laplacian equals 4 Re dz(dzbar f) to discretization order") {
  const Grid2D g(-1, 1, -1, 1, 41, 41);
  const RealField f = mts::make_field(g, [](auto u, auto v) { return sin(2.0 * u) * exp(v); }).sampled();
  const RealField l = mts::laplacian(f);
  // Differencing the sampled f_zbar a second time.
  const ComplexField twice = mts::wirtinger_dz(mts::wirtinger_dzbar(f).sampled());
  const double h2 = g.h_max() * g.h_max();
  // One-sided edge values enter the second difference, so keep two nodes away.
  double worst = 0.0;
  for (Index j = 2; j + 2 < g.n_v(); ++j) {
    for (Index i = 2; i + 2 < g.n_u(); ++i) {
      worst = std::max(worst, std::abs(l(i, j) - 4 * twice(i, j).real()));
    }
  }
  CHECK(worst < 20 * h2);
}

TEST_CASE("primitive of a constant") {
  const Grid2D g(-1, 1, 0, 2, 9, 9);
  for (const ComplexField& e :
       {ComplexField::constant(g, C(0.5)), ComplexField::constant(g, C(0.5)).sampled()}) {
    const auto r = mts::integrate_primitive(e);
    CHECK(r.loop_residual == 0.0);
    CHECK(r.primitive(0, 0) == 0.0);
    CHECK(mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
            return std::abs(r.primitive(i, j) - (g.u(i) - g.u(0)));
          }).value < 1e-14);
  }
}

TEST_CASE("primitive of zbar is |z|^2") {
  // E = zbar has E_zbar = 1, which is real: the form is closed.
  const Grid2D g(-1, 1, -0.5, 1.5, 17, 13);
  const ComplexField e = complex_field(g, [](const ComplexJet& z) { return conj(z); });
  const auto r = mts::integrate_primitive(e);
  CHECK(r.loop_residual < 1e-14);
  const double f0 = g.u(0) * g.u(0) + g.v(0) * g.v(0);
  CHECK(mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
          return std::abs(r.primitive(i, j) - (g.u(i) * g.u(i) + g.v(j) * g.v(j) - f0));
        }).value < 1e-14);
  // Jets of the primitive come from E: F_u = 2u, F_vv = 2.
  const RealJet jet = r.primitive.jet(3, 4);
  CHECK(jet.du == doctest::Approx(2 * g.u(3)));
  CHECK(jet.dvv == doctest::Approx(2.0));
  CHECK(jet.duv == 0.0);
}

TEST_CASE("non-closed form reports its circulation") {
  // E = i zbar: d(2 Re(E dz)) = -4 du dv, so each cell circulates -4 h_u h_v.
  const Grid2D g(-1, 1, -1, 1, 11, 21);
  const ComplexField e = complex_field(g, [](const ComplexJet& z) { return kI * conj(z); });
  const double cell = 4 * g.h_u() * g.h_v();
  for (const ComplexField& f : {e, e.sampled()}) {
    const auto r = mts::integrate_primitive(f);
    CHECK(std::abs(r.loop_residual - cell) < 1e-14);
    const Eigen::ArrayXXd c = mts::plaquette_circulation(f);
    CHECK((c + cell).abs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("path orders differ by the enclosed circulation") {
  const Grid2D g(-1, 1, -1, 1, 13, 9);
  const ComplexField closed = complex_field(g, [](const ComplexJet& z) {
    return 0.5 * exp(z) + conj(z) * z * 0.0 + conj(z);
  });
  const ComplexField open = complex_field(g, [](const ComplexJet& z) {
    return kI * conj(z) * conj(z) + exp(z);
  });
  for (const ComplexField& e : {closed, closed.sampled(), open, open.sampled()}) {
    const auto rc = mts::integrate_primitive(e, mts::PathOrder::kRowsThenColumns);
    const auto cr = mts::integrate_primitive(e, mts::PathOrder::kColumnsThenRows);
    const Eigen::ArrayXXd c = mts::plaquette_circulation(e);
    // Discrete Stokes on [0, i] x [0, j].
    for (Index j = 0; j < g.n_v(); ++j) {
      for (Index i = 0; i < g.n_u(); ++i) {
        const double enclosed = c.topLeftCorner(i, j).sum();
        CHECK(std::abs((rc.primitive(i, j) - cr.primitive(i, j)) - enclosed) < 1e-13);
      }
    }
  }
  // Exact closed integrand: both orders agree to roundoff.
  const auto rc = mts::integrate_primitive(closed, mts::PathOrder::kRowsThenColumns);
  const auto cr = mts::integrate_primitive(closed, mts::PathOrder::kColumnsThenRows);
  CHECK((rc.primitive.values() - cr.primitive.values()).abs().maxCoeff() <
        10 * rc.loop_residual + 1e-14);
}

TEST_CASE("trapezoid primitive converges at second order") {
  const double ratio = trapezoid_primitive_error(33) / trapezoid_primitive_error(65);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("Gauss-Legendre primitive is exact to roundoff") {
  const Grid2D g(-2, 2, -2, 2, 65, 65);
  const ComplexField e = complex_field(g, [](const ComplexJet& z) { return 0.5 * exp(kI * z) * z; });
  const auto r = mts::integrate_primitive(e);
  CHECK(r.loop_residual < 1e-13);
  // F = 2 Re G with G' = e^{iz} z / 2, G = e^{iz}(1 - iz)/2.
  auto F = [](double u, double v) {
    const C z(u, v);
    return (std::exp(kI * z) * (1.0 - kI * z)).real();
  };
  const double f0 = F(-2, -2);
  CHECK(mts::max_over(g, mts::Region::kAll, [&](Index i, Index j) {
          return std::abs(r.primitive(i, j) - (F(g.u(i), g.v(j)) - f0));
        }).value < 1e-12);
  // Off-grid the primitive provides exact derivatives and no value.
  const RealJet off = r.primitive.jet_at(0.123, -0.4);
  CHECK(std::isnan(off.v));
  const C ez = 0.5 * std::exp(kI * C(0.123, -0.4)) * C(0.123, -0.4);
  CHECK(off.du == doctest::Approx(2 * ez.real()));
  CHECK(off.dv == doctest::Approx(-2 * ez.imag()));
}

}  // TEST_SUITE
