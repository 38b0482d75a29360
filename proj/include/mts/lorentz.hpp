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

// Lorentz-Minkowski 4-space: the (+,+,+,-) inner product, its complex
// bilinear extension, and the three one-parameter rotation families.

#ifndef MTS_LORENTZ_HPP_
#define MTS_LORENTZ_HPP_

#include <complex>

#include <Eigen/Core>

namespace mts {

template <class Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

using LorentzVector4 = Vector4<double>;
using ComplexVector4 = Vector4<std::complex<double>>;

/// Signature (+,+,+,-) without conjugation. For complex arguments this is
/// the symmetric bilinear extension, not a Hermitian form.
template <class DerivedA, class DerivedB>
auto minkowski_inner(const Eigen::MatrixBase<DerivedA>& v,
                     const Eigen::MatrixBase<DerivedB>& w) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 4);
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 4);
  return v(0) * w(0) + v(1) * w(1) + v(2) * w(2) - v(3) * w(3);
}

template <class DerivedA, class DerivedB>
std::complex<double> complex_bilinear(const Eigen::MatrixBase<DerivedA>& v,
                                      const Eigen::MatrixBase<DerivedB>& w) {
  return minkowski_inner(v.template cast<std::complex<double>>(),
                         w.template cast<std::complex<double>>());
}

/// diag(1, 1, 1, -1).
Eigen::Matrix4d minkowski_metric();

enum class RotationKind { kParabolic, kElliptic, kHyperbolic, kIdentity };

const char* to_string(RotationKind kind);

struct LorentzRotation {
  using Matrix = Eigen::Matrix<double, 4, 4, Eigen::RowMajor>;

  RotationKind kind = RotationKind::kIdentity;
  double parameter = 0.0;
  Matrix matrix = Matrix::Identity();

  template <class Derived>
  auto operator*(const Eigen::MatrixBase<Derived>& x) const {
    return matrix.template cast<typename Derived::Scalar>() * x;
  }
};

LorentzRotation rotation_identity();
LorentzRotation rotation_parabolic(double lambda);
LorentzRotation rotation_elliptic(double tau);
LorentzRotation rotation_hyperbolic(double eta);

/// Rebuilds the rotation from its tag and parameter.
LorentzRotation make_rotation(RotationKind kind, double parameter);

/// max |A^T eta A - eta|.
double lorentz_defect(const LorentzRotation& rotation);

}  // namespace mts

#endif  // MTS_LORENTZ_HPP_
