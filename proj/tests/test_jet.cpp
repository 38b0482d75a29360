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
#include "mts/jet.hpp"

namespace {

using mts::ComplexJet;
using mts::RealJet;
using C = std::complex<double>;

// Central-difference check of a jet formula's derivatives.
template <class F>
void check_against_differences(F f, double u, double v, double tol) {
  const double h = 1e-4;
  auto val = [&](double a, double b) {
    return C(f(RealJet::variable_u(a), RealJet::variable_v(b)).v);
  };
  const auto j = f(RealJet::variable_u(u), RealJet::variable_v(v));
  CHECK(std::abs(C(j.du) - (val(u + h, v) - val(u - h, v)) / (2 * h)) < tol);
  CHECK(std::abs(C(j.dv) - (val(u, v + h) - val(u, v - h)) / (2 * h)) < tol);
  CHECK(std::abs(C(j.duu) - (val(u + h, v) - 2.0 * val(u, v) + val(u - h, v)) / (h * h)) <
        100 * tol);
  CHECK(std::abs(C(j.dvv) - (val(u, v + h) - 2.0 * val(u, v) + val(u, v - h)) / (h * h)) <
        100 * tol);
  const C mixed = (val(u + h, v + h) - val(u + h, v - h) - val(u - h, v + h) +
                   val(u - h, v - h)) / (4 * h * h);
  CHECK(std::abs(C(j.duv) - mixed) < 100 * tol);
}

}  // namespace

TEST_SUITE("jet") {

TEST_CASE("closed-form derivatives of sinh u sin u") {
  const double u = 0.7, v = -0.3;
  const RealJet f = sinh(RealJet::variable_u(u)) * sin(RealJet::variable_u(u)) +
                    0.0 * RealJet::variable_v(v);
  CHECK(f.du == doctest::Approx(std::cosh(u) * std::sin(u) + std::sinh(u) * std::cos(u)));
  CHECK(f.duu == doctest::Approx(2 * std::cosh(u) * std::cos(u)));
  CHECK(f.dvv == 0.0);
}

TEST_CASE("mixed real and complex formulas agree with differences") {
  const C i(0, 1);
  check_against_differences(
      [i](auto u, auto v) { return exp(i * (ComplexJet(u) + i * ComplexJet(v))); }, 0.4,
      0.2, 1e-7);
  check_against_differences([](auto u, auto v) { return exp(v) * cosh(u) / (2.0 + sin(u * v)); },
                            -0.6, 0.9, 1e-7);
  check_against_differences([](auto u, auto v) { return sqrt(1.0 + u * u + v * v); }, 0.3,
                            -1.1, 1e-7);
  check_against_differences(
      [i](auto u, auto v) {
        const ComplexJet z = ComplexJet(u) + i * ComplexJet(v);
        return abs2(z * z + 1.0) + mts::real(conj(z) * z);
      },
      0.8, 0.5, 1e-6);
}

TEST_CASE("Wirtinger derivatives of jets") {
  const C i(0, 1);
  const double u = 0.3, v = -0.8;
  const RealJet U = RealJet::variable_u(u);
  const RealJet V = RealJet::variable_v(v);
  const ComplexJet z = ComplexJet(U) + i * ComplexJet(V);
  // Holomorphic: f_zbar = 0, f_z = f'.
  const ComplexJet e = exp(i * z);
  CHECK(std::abs(mts::dzbar(e).v) < 1e-16);
  CHECK(std::abs(mts::dz(e).v - i * e.v) < 1e-15);
  // u^2 + v^2 = z zbar: f_z = zbar, f_zbar = z, f_{z zbar} = 1.
  const RealJet r = U * U + V * V;
  CHECK(std::abs(mts::dz(r).v - std::conj(z.v)) < 1e-15);
  CHECK(std::abs(mts::dzbar(r).v - z.v) < 1e-15);
  CHECK(mts::dzdzbar(r).v == doctest::Approx(1.0));
  // The first derivatives of f_z are known; the second are flagged NaN.
  const ComplexJet rz = mts::dz(r);
  CHECK(std::abs(rz.du - C(1.0, 0.0)) < 1e-15);
  CHECK(std::isnan(rz.duu.real()));
}

TEST_CASE("scaling keeps derivatives of a jet with unknown value") {
  const RealJet a(NAN, 1.0, 2.0, 3.0, 4.0, 5.0);
  const RealJet b = 2.0 * a;
  CHECK(std::isnan(b.v));
  CHECK(b.du == 2.0);
  CHECK(b.dvv == 10.0);
  CHECK((a / 2.0).duv == 2.0);
  const ComplexJet c = C(0.0, 1.0) * ComplexJet(a);
  CHECK(c.dv == C(0.0, 2.0));
  // A general product has no way to know the value is irrelevant.
  CHECK(std::isnan((RealJet(2.0) * a).du));
}

}  // TEST_SUITE
