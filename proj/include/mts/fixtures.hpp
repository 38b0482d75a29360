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

// Closed-form catalog: the Sigma_theta family joining the catenoid cousin
// to its hyperbolic counterpart, the two-parameter family, and the two
// classical zero-mean-curvature patches. Every field carries an exact
// provider.

#ifndef MTS_FIXTURES_HPP_
#define MTS_FIXTURES_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mts/representation.hpp"
#include "mts/weierstrass.hpp"

namespace mts {

enum class FixtureKind { kSecondKind, kExplicitPatch };

struct Fixture {
  std::string name;
  FixtureKind kind = FixtureKind::kExplicitPatch;
  std::map<std::string, double> parameters;
  Grid2D grid;
  /// Present for second-kind fixtures.
  std::optional<WeierstrassSecond> second;
  /// Closed-form immersion.
  RealField4 X;
  /// X at the grid origin, to anchor integrated patches.
  LorentzVector4 anchor = LorentzVector4::Zero();
  /// c with <X, X> = c, when the surface lies on a quadric.
  std::optional<double> quadric_constant;
  /// Closed-form Lambda(u, v).
  std::function<double(double, double)> conformal_factor;
  /// Whether H is known to vanish nowhere (false: H = 0).
  bool nonvanishing_H = false;

  /// Patch built directly from X.
  SurfacePatch explicit_patch() const { return patch_from_coordinates(X); }
  /// Representation options anchored to the closed form.
  RepresentOptions anchored() const {
    RepresentOptions o;
    o.anchor = anchor;
    return o;
  }
};

/// h = e^{iz}, M = cos(t) sinh u sin u - sin(t) cos u cos v,
/// N = e^v (cos(t) cosh u + sin(t) sin v). Requires t in [0, pi/2] and
/// cos(t) cosh u + sin(t) cos v != 0 on the whole grid rectangle, not only
/// at nodes; throws DomainError.
Fixture fixture_sigma_theta(double theta, const Grid2D& grid);

/// Subrectangle of the admissible domain for theta with n x n nodes.
Grid2D recommended_grid_sigma_theta(double theta, Index n);

/// h = e^{iz}, M = alpha u + beta v + sinh u sin u, N = e^v cosh u.
/// Requires alpha^2 + beta^2 < 1; throws DomainError.
Fixture fixture_two_parameter(double alpha, double beta, const Grid2D& grid);

enum class ClassicalSurface { kCatenoidR3, kHyperbolicCatenoidL3 };

/// Catenoid in {x4 = 0}, or the hyperbolic catenoid in {x1 = 0} (needs
/// v in (-pi/2, pi/2); throws DomainError).
Fixture fixture_classical(ClassicalSurface which, const Grid2D& grid);

/// Registry for the CLI: "sigma-theta" (theta), "two-param" (alpha, beta),
/// "catenoid", "hyperbolic-catenoid". Throws std::invalid_argument.
Fixture fixture_by_name(const std::string& name,
                        const std::map<std::string, double>& parameters,
                        const Grid2D& grid);

/// Recommended grid for a registry entry.
Grid2D recommended_grid(const std::string& name,
                        const std::map<std::string, double>& parameters, Index n);

}  // namespace mts

#endif  // MTS_FIXTURES_HPP_
