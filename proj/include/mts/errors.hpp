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

// Error types shared by all modules.

#ifndef MTS_ERRORS_HPP_
#define MTS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mts {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the parameter domain fails (pole, zero locus, fixture
/// domain). The message names the condition and the offending node.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Path integration left a loop residual above its threshold.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace mts

#endif  // MTS_ERRORS_HPP_
