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

// Uniform rectangular grids over the (u, v) parameter plane, z = u + i v.

#ifndef MTS_GRID_HPP_
#define MTS_GRID_HPP_

#include <string>

#include <Eigen/Core>

namespace mts {

using Index = Eigen::Index;

/// Node (i, j) sits at (u_min + i h_u, v_min + j h_v). Node (0, 0) is the
/// grid origin where every primitive is anchored.
class Grid2D {
 public:
  Grid2D() = default;
  /// Throws std::invalid_argument unless u_min < u_max, v_min < v_max and
  /// both counts are at least 3.
  Grid2D(double u_min, double u_max, double v_min, double v_max, Index n_u,
         Index n_v);

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  double v_min() const { return v_min_; }
  double v_max() const { return v_max_; }
  Index n_u() const { return n_u_; }
  Index n_v() const { return n_v_; }
  double h_u() const { return h_u_; }
  double h_v() const { return h_v_; }
  Index size() const { return n_u_ * n_v_; }

  double u(Index i) const { return i == n_u_ - 1 ? u_max_ : u_min_ + i * h_u_; }
  double v(Index j) const { return j == n_v_ - 1 ? v_max_ : v_min_ + j * h_v_; }

  bool is_interior(Index i, Index j) const {
    return i > 0 && j > 0 && i < n_u_ - 1 && j < n_v_ - 1;
  }
  bool contains(double u, double v) const {
    return u >= u_min_ && u <= u_max_ && v >= v_min_ && v <= v_max_;
  }

  /// Largest spacing, used for h^2-scaled tolerances.
  double h_max() const { return h_u_ > h_v_ ? h_u_ : h_v_; }

  bool operator==(const Grid2D& o) const {
    return u_min_ == o.u_min_ && u_max_ == o.u_max_ && v_min_ == o.v_min_ &&
           v_max_ == o.v_max_ && n_u_ == o.n_u_ && n_v_ == o.n_v_;
  }

  /// "umin:umax:vmin:vmax:NuxNv".
  std::string spec() const;
  /// Parses the spec() syntax; throws std::invalid_argument.
  static Grid2D parse(const std::string& spec);

 private:
  double u_min_ = 0.0;
  double u_max_ = 1.0;
  double v_min_ = 0.0;
  double v_max_ = 1.0;
  Index n_u_ = 3;
  Index n_v_ = 3;
  double h_u_ = 0.5;
  double h_v_ = 0.5;
};

/// Throws GridMismatch when the grids differ.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what);

}  // namespace mts

#endif  // MTS_GRID_HPP_
