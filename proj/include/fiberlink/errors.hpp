// Copyright 2026 The fiberlink Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiberlink {

/// Parameter outside the region where a quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands built on incompatible bases or truncations.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Propagation produced non-finite or unphysical numbers.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Analytic and numerical spectra disagree.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Liouvillian kernel has more than one stationary direction.
class DegenerateSteadyState : public std::runtime_error {
 public:
  explicit DegenerateSteadyState(std::size_t dimension)
      : std::runtime_error("steady state is not unique: null space dimension " +
                           std::to_string(dimension)),
        dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

}  // namespace fiberlink
