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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bangle/errors.hpp"

namespace bangle {

// A finite-dimensional real coordinate vector. Coordinates are validated to
// be finite at construction and are immutable afterwards.
class Vector {
 public:
  Vector(std::initializer_list<double> coords);
  explicit Vector(std::vector<double> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }
  std::span<const double> span() const noexcept { return {coords_.data(), coords_.size()}; }

  bool is_zero() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

Vector scaled(const Vector& v, double c);

// x + lambda * y; the inputs must share a dimension.
Vector add_scaled(const Vector& x, double lambda, const Vector& y);

void require_same_dimension(const Vector& x, const Vector& y);

// Parses comma-separated decimals with no brackets, e.g. "1,0.5,-2".
Vector parse_vector(const std::string& text);
std::string format_vector(const Vector& v);

}  // namespace bangle
