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

#include "mts/lorentz.hpp"

#include <cmath>

namespace mts {

Eigen::Matrix4d minkowski_metric() {
  return Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
}

const char* to_string(RotationKind kind) {
  switch (kind) {
    case RotationKind::kParabolic:
      return "parabolic";
    case RotationKind::kElliptic:
      return "elliptic";
    case RotationKind::kHyperbolic:
      return "hyperbolic";
    case RotationKind::kIdentity:
      break;
  }
  return "identity";
}

LorentzRotation rotation_identity() { return LorentzRotation{}; }

LorentzRotation rotation_parabolic(double lambda) {
  // Negations are written as 0.0 - x so that parameter 0 yields +0.0.
  const double l = lambda;
  const double nl = 0.0 - l;
  const double q = 0.5 * l * l;
  const double nq = 0.0 - q;
  LorentzRotation r;
  r.kind = RotationKind::kParabolic;
  r.parameter = lambda;
  r.matrix << 1, 0, 0, 0,
              0, 1, nl, nl,
              0, l, 1 - q, nq,
              0, nl, q, 1 + q;
  return r;
}

LorentzRotation rotation_elliptic(double tau) {
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  LorentzRotation r;
  r.kind = RotationKind::kElliptic;
  r.parameter = tau;
  r.matrix << c, 0.0 - s, 0, 0,
              s, c, 0, 0,
              0, 0, 1, 0,
              0, 0, 0, 1;
  return r;
}

LorentzRotation rotation_hyperbolic(double eta) {
  const double c = std::cosh(eta);
  const double s = std::sinh(eta);
  LorentzRotation r;
  r.kind = RotationKind::kHyperbolic;
  r.parameter = eta;
  r.matrix << 1, 0, 0, 0,
              0, 1, 0, 0,
              0, 0, c, s,
              0, 0, s, c;
  return r;
}

LorentzRotation make_rotation(RotationKind kind, double parameter) {
  switch (kind) {
    case RotationKind::kParabolic:
      return rotation_parabolic(parameter);
    case RotationKind::kElliptic:
      return rotation_elliptic(parameter);
    case RotationKind::kHyperbolic:
      return rotation_hyperbolic(parameter);
    case RotationKind::kIdentity:
      break;
  }
  return rotation_identity();
}

double lorentz_defect(const LorentzRotation& rotation) {
  const Eigen::Matrix4d a = rotation.matrix;
  const Eigen::Matrix4d eta = minkowski_metric();
  return (a.transpose() * eta * a - eta).cwiseAbs().maxCoeff();
}

}  // namespace mts
