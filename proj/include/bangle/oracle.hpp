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

#include <cstdint>
#include <functional>
#include <vector>

#include "bangle/kernels.hpp"
#include "bangle/norm.hpp"
#include "bangle/profile.hpp"
#include "bangle/vector.hpp"

namespace bangle {

// Dense pointwise scan of the radial profile over the boundedness bracket
// (-2||x||/||y||, +2||x||/||y||). Independent of the interval solvers; used
// to certify them and to generate reference values.
struct ScanResult {
  std::vector<double> lambdas_below;  // grid points with f(lambda) < f(0), ascending
  double grid_step = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double norm_x = 0.0;   // the level f(0)
  bool contiguous = true;  // recorded grid indices form one run
  double min_value = 0.0;  // smallest profile value seen
  double min_lambda = 0.0;

  bool empty() const { return lambdas_below.empty(); }
  bool one_sided() const;
  double measured_inf() const;  // 0 when empty
  double measured_sup() const;
  // Boundary estimate: farthest recorded point plus half a grid step, so the
  // true boundary lies within step/2 of it. 0 when empty.
  double gamma_estimate() const;
  IntervalShape shape() const;  // meaningful when one_sided()
};

ScanResult grid_scan(const NormSpec& spec, const Vector& x, const Vector& y,
                     std::size_t num_points);

// Same scan over an arbitrary profile callable with level f0 and symmetric
// bracket (-radius, radius); the seam for injecting non-norm test doubles.
using ProfileFn = std::function<double(double)>;
ScanResult grid_scan_profile(const ProfileFn& fn, double f0, double radius,
                             std::size_t num_points);

// Clause-by-clause check that a scan has the structure every norm profile
// must exhibit: the strict sublevel set excludes 0, is one-sided and
// contiguous, stays inside the boundedness bracket, touches 0, and meets the
// level at its measured endpoints (up to one grid step of slack).
struct StructureReport {
  bool zero_excluded = true;
  bool one_sided = true;
  bool contiguous = true;
  bool bounded = true;
  bool touches_zero = true;
  bool endpoints_on_level = true;
  double measured_inf = 0.0;
  double measured_sup = 0.0;

  bool all() const {
    return zero_excluded && one_sided && contiguous && bounded && touches_zero &&
           endpoints_on_level;
  }
};

StructureReport verify_sublevel_structure(const NormSpec& spec, const Vector& x, const Vector& y,
                                          std::size_t num_points);
StructureReport verify_sublevel_structure_profile(const ProfileFn& fn, double f0,
                                                  double lipschitz, double radius,
                                                  std::size_t num_points);

// Checks, on the sampled grid, that ||x + l y|| >= ||x|| holding throughout
// the window [0, delta) forces it on every sampled l >= 0 (and mirrored on
// the negative side).
bool verify_local_global(const NormSpec& spec, const Vector& x, const Vector& y, double delta,
                         std::size_t num_points);

// Deterministic random-case source. Coordinates are uniform in [-2, 2];
// dimensions come from the spec when it pins one and from {2, 3, 5}
// otherwise; vectors with norm below 1e-6 are rejected. Identical seeds
// produce identical streams.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : state_(seed) {}

  double uniform01();
  double uniform(double lo, double hi);
  // Uniform magnitude in [min_abs, max_abs] with a random sign.
  double signed_scalar(double min_abs, double max_abs);
  std::size_t pick_dimension(const NormSpec& spec);
  Vector random_vector(const NormSpec& spec, std::size_t dim);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace bangle
