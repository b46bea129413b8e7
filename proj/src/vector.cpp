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
#include "bangle/vector.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace bangle {

namespace {

void validate(const std::vector<double>& coords) {
  if (coords.empty()) throw PreconditionError("vector must have dimension >= 1");
  for (double c : coords) {
    if (!std::isfinite(c)) throw PreconditionError("vector coordinates must be finite");
  }
}

}  // namespace

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) { validate(coords_); }

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) { validate(coords_); }

bool Vector::is_zero() const noexcept {
  for (double c : coords_) {
    if (c != 0.0) return false;
  }
  return true;
}

Vector scaled(const Vector& v, double c) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return Vector(std::move(out));
}

Vector add_scaled(const Vector& x, double lambda, const Vector& y) {
  require_same_dimension(x, y);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + lambda * y[i];
  return Vector(std::move(out));
}

void require_same_dimension(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("vectors have mismatched dimensions " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  }
}

Vector parse_vector(const std::string& text) {
  std::vector<double> coords;
  std::size_t pos = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    double value = 0.0;
    auto [next, ec] = std::from_chars(begin + pos, end, value);
    if (ec != std::errc{}) throw ParseError("expected a number", pos);
    if (!std::isfinite(value)) throw ParseError("coordinate must be finite", pos);
    coords.push_back(value);
    pos = static_cast<std::size_t>(next - begin);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Vector(std::move(coords));
}

std::string format_vector(const Vector& v) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v[i]);
    out.append(buf, p);
  }
  return out;
}

}  // namespace bangle
