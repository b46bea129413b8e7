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
#include <cmath>
#include <vector>

#include <doctest.h>

#include "bangle/kernels.hpp"
#include "bangle/oracle.hpp"
#include "bangle/profile.hpp"

using namespace bangle;
using kernels::Backend;
using kernels::ProfileKernel;

namespace {

std::vector<NormSpec> kernel_specs() {
  return {
      NormSpec::l1(),
      NormSpec::linf(),
      NormSpec::l2(),
      NormSpec::lp(3.0),
      NormSpec::weighted_lp(1.0, {1.0, 0.5, 2.0}),
      NormSpec::weighted_lp(2.0, {1.0, 0.5, 2.0}),
      NormSpec::weighted_lp_inf({1.0, 2.0}),
      NormSpec::inner_product(SymMatrix(2, {2.0, 0.5, 0.5, 1.0})),
  };
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar and AVX2 grids are bitwise identical") {
  if (!kernels::avx2_supported()) {
    MESSAGE("AVX2 not available on this CPU; equivalence tested via fallback only");
  }
  CaseGenerator gen(2024);
  for (const NormSpec& spec : kernel_specs()) {
    for (int t = 0; t < 25; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x = gen.random_vector(spec, dim);
      const Vector y = gen.random_vector(spec, dim);
      const ProfileKernel k = kernels::lower_profile(spec, x, y);
      // Odd and even counts, including a non-multiple-of-4 tail.
      for (std::size_t count : {1021UL, 1024UL, 5UL, 3UL}) {
        const double center = static_cast<double>(count - 1) / 2.0;
        const double step = gen.uniform(1e-4, 0.5);
        std::vector<double> a(count), b(count);
        kernels::profile_grid_scalar(k, center, step, count, a);
        kernels::profile_grid_avx2(k, center, step, count, b);
        for (std::size_t j = 0; j < count; ++j) {
          REQUIRE(a[j] == b[j]);
        }
      }
    }
  }
}

TEST_CASE("grid value at lambda = 0 reproduces norm_eval(x) exactly") {
  CaseGenerator gen(7);
  for (const NormSpec& spec : kernel_specs()) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x = gen.random_vector(spec, dim);
      const Vector y = gen.random_vector(spec, dim);
      const ProfileKernel k = kernels::lower_profile(spec, x, y);
      const std::size_t count = 101;  // odd: center index hits 0 exactly
      std::vector<double> out(count);
      kernels::profile_grid(k, 50.0, 0.01, count, out);
      REQUIRE(out[50] == norm_eval(spec, x));
    }
  }
}

TEST_CASE("kernel values track the profile") {
  CaseGenerator gen(99);
  for (const NormSpec& spec : kernel_specs()) {
    const std::size_t dim = gen.pick_dimension(spec);
    const Vector x = gen.random_vector(spec, dim);
    const Vector y = gen.random_vector(spec, dim);
    const ProfileKernel k = kernels::lower_profile(spec, x, y);
    const std::size_t count = 257;
    const double center = 128.0;
    const double step = 0.015625;
    std::vector<double> out(count);
    kernels::profile_grid(k, center, step, count, out);
    for (std::size_t j = 0; j < count; j += 17) {
      const double lambda = (static_cast<double>(j) - center) * step;
      const double expected = profile_eval(spec, x, y, lambda);
      CHECK(out[j] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("backend selection") {
  const Backend before = kernels::active_backend();
  kernels::set_backend(Backend::Scalar);
  CHECK(kernels::active_backend() == Backend::Scalar);
  if (kernels::avx2_supported()) {
    kernels::set_backend(Backend::Avx2);
    CHECK(kernels::active_backend() == Backend::Avx2);
  } else {
    CHECK_THROWS_AS(kernels::set_backend(Backend::Avx2), PreconditionError);
  }
  kernels::set_backend(before);
}

TEST_CASE("dispatch does not change scan results") {
  if (!kernels::avx2_supported()) return;
  const NormSpec spec = NormSpec::linf();
  const Vector x{1.0, 0.0};
  const Vector y{1.0, 1.0};
  const Backend before = kernels::active_backend();
  kernels::set_backend(Backend::Scalar);
  const ScanResult a = grid_scan(spec, x, y, 10001);
  kernels::set_backend(Backend::Avx2);
  const ScanResult b = grid_scan(spec, x, y, 10001);
  kernels::set_backend(before);
  REQUIRE(a.lambdas_below.size() == b.lambdas_below.size());
  CHECK(a.lambdas_below == b.lambdas_below);
  CHECK(a.min_value == b.min_value);
}

TEST_SUITE_END();
