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

// Named pass/fail checks shared by validators, patches and the CLI.

#ifndef MTS_REPORT_HPP_
#define MTS_REPORT_HPP_

#include <string>
#include <vector>

#include "mts/grid.hpp"

namespace mts {

struct Check {
  enum class Bound { kUpper, kLower };

  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  /// kUpper: pass iff value < threshold. kLower: pass iff value > threshold.
  Bound bound = Bound::kUpper;
  bool passed = false;
  /// Worst node.
  Index i = 0;
  Index j = 0;
  double u = 0.0;
  double v = 0.0;
};

Check upper_check(std::string name, double value, double threshold,
                  const Grid2D& grid, Index i, Index j);
Check lower_check(std::string name, double value, double threshold,
                  const Grid2D& grid, Index i, Index j);

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  /// Throws std::out_of_range for unknown names.
  const Check& check(const std::string& name) const;
  bool has(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  /// One line per check.
  std::string table() const;
};

}  // namespace mts

#endif  // MTS_REPORT_HPP_
