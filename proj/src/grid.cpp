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

#include "mts/grid.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mts/errors.hpp"

namespace mts {

Grid2D::Grid2D(double u_min, double u_max, double v_min, double v_max,
               Index n_u, Index n_v)
    : u_min_(u_min), u_max_(u_max), v_min_(v_min), v_max_(v_max), n_u_(n_u),
      n_v_(n_v) {
  if (!(u_min < u_max) || !(v_min < v_max)) {
    throw std::invalid_argument("grid bounds must satisfy min < max");
  }
  if (n_u < 3 || n_v < 3) {
    throw std::invalid_argument("grid needs at least 3 nodes per axis");
  }
  h_u_ = (u_max - u_min) / static_cast<double>(n_u - 1);
  h_v_ = (v_max - v_min) / static_cast<double>(n_v - 1);
}

std::string Grid2D::spec() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g:%.17g:%.17g:%.17g:%ldx%ld", u_min_,
                u_max_, v_min_, v_max_, static_cast<long>(n_u_),
                static_cast<long>(n_v_));
  return buf;
}

Grid2D Grid2D::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 5) {
    throw std::invalid_argument("grid spec must be umin:umax:vmin:vmax:NuxNv, got '" +
                                spec + "'");
  }
  const auto x = parts[4].find('x');
  if (x == std::string::npos) {
    throw std::invalid_argument("grid counts must look like NuxNv, got '" +
                                parts[4] + "'");
  }
  try {
    return Grid2D(std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]),
                  std::stod(parts[3]), std::stol(parts[4].substr(0, x)),
                  std::stol(parts[4].substr(x + 1)));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr &&
        std::string(e.what()).rfind("grid", 0) == 0) {
      throw;
    }
    throw std::invalid_argument("malformed grid spec '" + spec + "'");
  }
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!(a == b)) {
    throw GridMismatch(std::string(what) + ": fields live on different grids (" +
                       a.spec() + " vs " + b.spec() + ")");
  }
}

}  // namespace mts
