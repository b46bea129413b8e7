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
#include <string>
#include <vector>

#include "bangle/norm.hpp"

namespace bangle {

struct PropertyResult {
  std::string name;
  std::string spec_text;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // empty when all trials passed

  bool passed() const { return failures == 0; }
};

struct VerifySummary {
  std::vector<PropertyResult> properties;

  int total_failures() const;
  bool all_passed() const { return total_failures() == 0; }
};

struct VerifyOptions {
  int trials = 500;
  std::uint64_t seed = 42;
  std::size_t scan_points = 10000;
  double tol = 1e-10;
};

// The norms the default suite runs against: l1, l2, l3, linf, a weighted l2,
// and a non-diagonal inner-product norm.
std::vector<NormSpec> default_verify_specs();

// Runs every property against every spec with per-(spec, property) seeded
// substreams, so results are deterministic in the seed and independent of
// execution order. Properties cover the norm axioms, the structure of the
// strict sublevel set, local/global window equivalence, classification and
// gamma scaling laws, gamma-star invariance, the cosine bound and sign rule,
// oracle-vs-solver agreement, exact-vs-bisection agreement, comparison
// antisymmetry, and the inner-product identities on l2.
VerifySummary run_verify(const std::vector<NormSpec>& specs, const VerifyOptions& options);

// Negative control: runs the sublevel-structure checks against a deliberately
// non-convex profile. The checks must flag it, so the summary always reports
// failures; a clean negative control means the checker itself is broken.
VerifySummary run_negative_control(const VerifyOptions& options);

}  // namespace bangle
