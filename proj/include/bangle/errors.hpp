// Copyright 2026 The bangle authors
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

namespace bangle {

// Malformed textual input (norm spec or vector literal). Carries the byte
// offset of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands of incompatible dimension.
class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An argument violates an operation precondition (zero vector, invalid
// parameter, non-positive-definite matrix).
class PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An iterative solver failed to converge. For a valid norm this cannot
// happen, so it usually signals a broken user-supplied spec.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bangle
