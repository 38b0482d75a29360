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
#include <random>

#include "doctest.h"
#include "mts/lorentz.hpp"

namespace {

using mts::ComplexVector4;
using mts::LorentzRotation;
using mts::LorentzVector4;
using C = std::complex<double>;

LorentzRotation family(int k, double p) {
  switch (k) {
    case 0:
      return mts::rotation_parabolic(p);
    case 1:
      return mts::rotation_elliptic(p);
    default:
      return mts::rotation_hyperbolic(p);
  }
}

}  // namespace

TEST_SUITE("lorentz") {

TEST_CASE("minkowski inner product") {
  CHECK(mts::minkowski_inner(LorentzVector4(0, 0, 0, 1), LorentzVector4(0, 0, 0, 1)) == -1.0);
  CHECK(mts::minkowski_inner(LorentzVector4(1, 0, 0, 0), LorentzVector4(0, 0, 0, 1)) == 0.0);
  // Null normal for g = 1 + 2i: (2, 4, 4, 6).
  const C g(1.0, 2.0);
  const double a = std::norm(g);
  const LorentzVector4 n(2 * g.real(), 2 * g.imag(), -1 + a, 1 + a);
  CHECK(n == LorentzVector4(2, 4, 4, 6));
  CHECK(mts::minkowski_inner(n, n) == 0.0);
}

TEST_CASE("complex bilinear form has no conjugation") {
  const C i(0, 1);
  const C g(1.0, 0.0);
  const ComplexVector4 g1(1.0 / g, i / g, 1.0, 1.0);
  CHECK(std::abs(mts::complex_bilinear(g1, g1)) == 0.0);
  // Hermitian pairing of the same vector is 2, not 0.
  CHECK(mts::complex_bilinear(g1, g1.conjugate()) == C(2.0, 0.0));

  const ComplexVector4 f1(1.0, i, 0.0, 0.0);
  const ComplexVector4 f2(1.0, -i, 0.0, 0.0);
  CHECK(mts::complex_bilinear(f1, f2) == C(2.0, 0.0));
  CHECK(mts::complex_bilinear(ComplexVector4::Zero(), f1) == C(0.0, 0.0));

  const C z(0.3, -1.7);
  const ComplexVector4 g1z(1.0 / z, i / z, 1.0, 1.0);
  CHECK(std::abs(mts::complex_bilinear(g1z, g1z)) < 1e-15);
}

TEST_CASE("rotation examples") {
  const LorentzVector4 y = mts::rotation_parabolic(1.0) * LorentzVector4(0, 0, 0, 1);
  CHECK(y == LorentzVector4(0, -1, -0.5, 1.5));

  const LorentzVector4 e = mts::rotation_elliptic(M_PI / 2) * LorentzVector4(1, 0, 0, 0);
  CHECK(std::abs(e(0)) < 1e-16);
  CHECK(e(1) == 1.0);

  const LorentzVector4 b = mts::rotation_hyperbolic(1.0) * LorentzVector4(0, 0, 1, 0);
  CHECK(b == LorentzVector4(0, 0, std::cosh(1.0), std::sinh(1.0)));
}

TEST_CASE("parameter zero is the identity bitwise") {
  for (int k = 0; k < 3; ++k) {
    const LorentzRotation r = family(k, 0.0);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(r.matrix(a, b) == expected);
        CHECK(std::signbit(r.matrix(a, b)) == false);
      }
    }
  }
}

TEST_CASE("rotations preserve the inner product") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> param(-3.0, 3.0);
  for (const auto& [k, p] : {std::pair{0, 0.7}, std::pair{1, 1.1}, std::pair{2, -0.5}}) {
    const LorentzRotation r = family(k, p);
    for (int t = 0; t < 20; ++t) {
      const LorentzVector4 v = LorentzVector4::NullaryExpr([&] { return unit(rng); });
      const LorentzVector4 w = LorentzVector4::NullaryExpr([&] { return unit(rng); });
      CHECK(std::abs(mts::minkowski_inner(r * v, r * w) - mts::minkowski_inner(v, w)) < 1e-12);
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (int t = 0; t < 50; ++t) {
      CHECK(mts::lorentz_defect(family(k, param(rng))) < 1e-12);
    }
  }
}

TEST_CASE("composition is additive in the parameter") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> param(-1.5, 1.5);
  for (int k = 0; k < 3; ++k) {
    for (int t = 0; t < 30; ++t) {
      const double p = param(rng);
      const double q = param(rng);
      const LorentzRotation::Matrix ab = family(k, p).matrix * family(k, q).matrix;
      CHECK((ab - family(k, p + q).matrix).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("make_rotation rebuilds from tag and parameter") {
  const LorentzRotation r = mts::rotation_parabolic(0.25);
  const LorentzRotation s = mts::make_rotation(r.kind, r.parameter);
  CHECK(r.matrix == s.matrix);
  CHECK(std::string(mts::to_string(s.kind)) == "parabolic");
}

}  // TEST_SUITE
