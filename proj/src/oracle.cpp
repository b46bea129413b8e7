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
#include "bangle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bangle {

namespace {

constexpr std::size_t kChunk = 8192;

void require_nonzero(const Vector& x, const Vector& y) {
  if (x.is_zero() || y.is_zero()) throw PreconditionError("vectors must be nonzero");
}

// Shared scan loop. eval(j0, m, out) fills out[0..m) with f at grid indices
// j0..j0+m; the grid is l_j = (j - center) * step, which hits 0 exactly when
// the point count is odd.
template <typename EvalChunk>
ScanResult scan_core(EvalChunk&& eval, double center, double step, std::size_t num_points,
                     double f0) {
  ScanResult r;
  r.grid_step = step;
  r.bracket_lo = (0.0 - center) * step;
  r.bracket_hi = (static_cast<double>(num_points - 1) - center) * step;
  r.norm_x = f0;
  r.min_value = f0;
  r.min_lambda = 0.0;

  std::vector<double> buf(std::min(num_points, kChunk));
  std::size_t first = 0, last = 0, recorded = 0;
  for (std::size_t j0 = 0; j0 < num_points; j0 += kChunk) {
    const std::size_t m = std::min(kChunk, num_points - j0);
    eval(j0, m, std::span<double>(buf.data(), m));
    for (std::size_t t = 0; t < m; ++t) {
      const double value = buf[t];
      const std::size_t j = j0 + t;
      const double lambda_j = (static_cast<double>(j) - center) * step;
      if (value < f0) {
        r.lambdas_below.push_back(lambda_j);
        if (recorded == 0) first = j;
        last = j;
        ++recorded;
      }
      if (value < r.min_value) {
        r.min_value = value;
        r.min_lambda = lambda_j;
      }
    }
  }
  r.contiguous = recorded == 0 || (last - first + 1 == recorded);
  return r;
}

StructureReport structure_from_scan(const ScanResult& scan, double f0, double lipschitz,
                                    double radius,
                                    const std::function<double(double)>& point_eval) {
  StructureReport rep;
  rep.measured_inf = scan.measured_inf();
  rep.measured_sup = scan.measured_sup();
  if (scan.empty()) return rep;

  for (double l : scan.lambdas_below) {
    if (l == 0.0) rep.zero_excluded = false;
  }
  rep.one_sided = scan.one_sided();
  rep.contiguous = scan.contiguous;
  const double bound = radius * (1.0 + 1e-12);
  rep.bounded = std::max(std::abs(rep.measured_inf), std::abs(rep.measured_sup)) <= bound;
  const double nearest =
      std::min(std::abs(scan.lambdas_below.front()), std::abs(scan.lambdas_below.back()));
  rep.touches_zero = nearest <= 1.5 * scan.grid_step;
  const double slack = 1.5 * scan.grid_step * lipschitz;
  rep.endpoints_on_level = point_eval(rep.measured_inf) >= f0 - slack &&
                           point_eval(rep.measured_sup) >= f0 - slack;
  return rep;
}

}  // namespace

bool ScanResult::one_sided() const {
  if (lambdas_below.empty()) return true;
  return lambdas_below.front() > 0.0 || lambdas_below.back() < 0.0;
}

double ScanResult::measured_inf() const { return empty() ? 0.0 : lambdas_below.front(); }

double ScanResult::measured_sup() const { return empty() ? 0.0 : lambdas_below.back(); }

double ScanResult::gamma_estimate() const {
  if (empty()) return 0.0;
  const double far = std::max(std::abs(lambdas_below.front()), std::abs(lambdas_below.back()));
  return far + 0.5 * grid_step;
}

IntervalShape ScanResult::shape() const {
  if (empty()) return IntervalShape::Empty;
  return lambdas_below.back() < 0.0 ? IntervalShape::NegativeSide : IntervalShape::PositiveSide;
}

ScanResult grid_scan(const NormSpec& spec, const Vector& x, const Vector& y,
                     std::size_t num_points) {
  require_nonzero(x, y);
  if (num_points < 16) throw PreconditionError("num_points must be at least 16");
  const double norm_x = norm_eval(spec, x);
  const double norm_y = norm_eval(spec, y);
  const double radius = 2.0 * norm_x / norm_y;
  const double center = static_cast<double>(num_points - 1) / 2.0;
  const double step = radius / center;
  const kernels::ProfileKernel kernel = kernels::lower_profile(spec, x, y);
  return scan_core(
      [&kernel, center, step](std::size_t j0, std::size_t m, std::span<double> out) {
        // Shift the center so the chunk sees its own indices; (center - j0)
        // is exact, keeping grid values identical to an unchunked pass.
        kernels::profile_grid(kernel, center - static_cast<double>(j0), step, m, out);
      },
      center, step, num_points, norm_x);
}

ScanResult grid_scan_profile(const ProfileFn& fn, double f0, double radius,
                             std::size_t num_points) {
  if (num_points < 16) throw PreconditionError("num_points must be at least 16");
  if (!(radius > 0.0)) throw PreconditionError("radius must be positive");
  const double center = static_cast<double>(num_points - 1) / 2.0;
  const double step = radius / center;
  return scan_core(
      [&fn, center, step](std::size_t j0, std::size_t m, std::span<double> out) {
        for (std::size_t t = 0; t < m; ++t) {
          out[t] = fn((static_cast<double>(j0 + t) - center) * step);
        }
      },
      center, step, num_points, f0);
}

StructureReport verify_sublevel_structure(const NormSpec& spec, const Vector& x, const Vector& y,
                                          std::size_t num_points) {
  const ScanResult scan = grid_scan(spec, x, y, num_points);
  const double norm_y = norm_eval(spec, y);
  const double radius = 2.0 * scan.norm_x / norm_y;
  return structure_from_scan(scan, scan.norm_x, norm_y, radius,
                             [&](double l) { return profile_eval(spec, x, y, l); });
}

StructureReport verify_sublevel_structure_profile(const ProfileFn& fn, double f0,
                                                  double lipschitz, double radius,
                                                  std::size_t num_points) {
  const ScanResult scan = grid_scan_profile(fn, f0, radius, num_points);
  return structure_from_scan(scan, f0, lipschitz, radius, fn);
}

bool verify_local_global(const NormSpec& spec, const Vector& x, const Vector& y, double delta,
                         std::size_t num_points) {
  if (!(delta > 0.0)) throw PreconditionError("delta must be positive");
  const ScanResult scan = grid_scan(spec, x, y, num_points);
  bool fails_in_pos_window = false, fails_pos = false;
  bool fails_in_neg_window = false, fails_neg = false;
  for (double l : scan.lambdas_below) {
    if (l > 0.0) {
      fails_pos = true;
      if (l < delta) fails_in_pos_window = true;
    } else if (l < 0.0) {
      fails_neg = true;
      if (l > -delta) fails_in_neg_window = true;
    }
  }
  const bool pos_ok = fails_in_pos_window || !fails_pos;
  const bool neg_ok = fails_in_neg_window || !fails_neg;
  return pos_ok && neg_ok;
}

// splitmix64; stable across platforms, unlike the standard distributions.
std::uint64_t CaseGenerator::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CaseGenerator::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double CaseGenerator::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double CaseGenerator::signed_scalar(double min_abs, double max_abs) {
  const double magnitude = uniform(min_abs, max_abs);
  return (next() & 1) ? magnitude : -magnitude;
}

std::size_t CaseGenerator::pick_dimension(const NormSpec& spec) {
  if (auto d = spec.dimension()) return *d;
  constexpr std::size_t dims[] = {2, 3, 5};
  return dims[next() % 3];
}

Vector CaseGenerator::random_vector(const NormSpec& spec, std::size_t dim) {
  while (true) {
    std::vector<double> coords(dim);
    for (double& c : coords) c = uniform(-2.0, 2.0);
    Vector v(std::move(coords));
    if (norm_eval(spec, v) >= 1e-6) return v;
  }
}

}  // namespace bangle
