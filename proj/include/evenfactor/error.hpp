// Copyright 2026 The evenfactor Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace evenfactor {

// Bad input: out-of-range ids, parameter constraints, overlapping sets.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact method was asked to run beyond its configured size cap.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative numerics that did not reach tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction parameters violating one or more family constraints. Every
// violated constraint is listed, not only the first.
class ConstraintViolation : public InvalidArgument {
 public:
  explicit ConstraintViolation(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<std::string> violations_;
};

}  // namespace evenfactor
