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

#include "mts/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace mts {

namespace {

Check make_check(std::string name, double value, double threshold,
                 Check::Bound bound, const Grid2D& grid, Index i, Index j) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = threshold;
  c.bound = bound;
  // NaN fails both ways.
  c.passed = bound == Check::Bound::kUpper ? value < threshold : value > threshold;
  c.i = i;
  c.j = j;
  c.u = grid.u(i);
  c.v = grid.v(j);
  return c;
}

}  // namespace

Check upper_check(std::string name, double value, double threshold,
                  const Grid2D& grid, Index i, Index j) {
  return make_check(std::move(name), value, threshold, Check::Bound::kUpper,
                    grid, i, j);
}

Check lower_check(std::string name, double value, double threshold,
                  const Grid2D& grid, Index i, Index j) {
  return make_check(std::move(name), value, threshold, Check::Bound::kLower,
                    grid, i, j);
}

bool Report::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const Check& Report::check(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

bool Report::has(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return true;
  }
  return false;
}

const Check* Report::first_failure() const {
  for (const Check& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string Report::table() const {
  std::string out;
  char line[256];
  for (const Check& c : checks) {
    std::snprintf(line, sizeof(line), "%-4s %-28s %12.4e %s %10.3e  at (u,v)=(%.6g, %.6g)\n",
                  c.passed ? "ok" : "FAIL", c.name.c_str(), c.value,
                  c.bound == Check::Bound::kUpper ? "<" : ">", c.threshold, c.u,
                  c.v);
    out += line;
  }
  return out;
}

}  // namespace mts
