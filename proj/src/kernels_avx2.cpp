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

// AVX2/FMA variants of the profile kernels, 4 grid points per iteration.
// This translation unit is compiled with -mavx2 -mfma; callers must gate on
// avx2_supported(). Each lane performs exactly the operations of
// profile_point_scalar, so scalar and AVX2 output are bitwise identical.
#include "bangle/kernels.hpp"

#if defined(BANGLE_HAVE_X86)

#include <immintrin.h>

namespace bangle::kernels {

namespace {

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

}  // namespace

void profile_grid_avx2(const ProfileKernel& k, double center, double step, std::size_t count,
                       std::span<double> out) {
  if (k.family == ProfileKernel::Family::PowSum) {
    profile_grid_scalar(k, center, step, count, out);
    return;
  }

  const __m256d vcenter = _mm256_set1_pd(center);
  const __m256d vstep = _mm256_set1_pd(step);
  const __m256d vzero = _mm256_setzero_pd();
  const std::size_t n = k.u.size();

  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d idx =
        _mm256_setr_pd(static_cast<double>(j), static_cast<double>(j + 1),
                       static_cast<double>(j + 2), static_cast<double>(j + 3));
    const __m256d lam = _mm256_mul_pd(_mm256_sub_pd(idx, vcenter), vstep);
    __m256d r;
    switch (k.family) {
      case ProfileKernel::Family::SumAbs: {
        r = vzero;
        for (std::size_t i = 0; i < n; ++i) {
          const __m256d t = _mm256_fmadd_pd(lam, _mm256_set1_pd(k.v[i]), _mm256_set1_pd(k.u[i]));
          r = _mm256_add_pd(r, abs_pd(t));
        }
        break;
      }
      case ProfileKernel::Family::MaxAbs: {
        r = vzero;
        for (std::size_t i = 0; i < n; ++i) {
          const __m256d t = _mm256_fmadd_pd(lam, _mm256_set1_pd(k.v[i]), _mm256_set1_pd(k.u[i]));
          r = _mm256_max_pd(r, abs_pd(t));
        }
        break;
      }
      default: {  // Quadratic
        __m256d q = _mm256_fmadd_pd(lam, _mm256_set1_pd(k.c), _mm256_set1_pd(k.b));
        q = _mm256_fmadd_pd(lam, q, _mm256_set1_pd(k.a));
        r = _mm256_sqrt_pd(_mm256_max_pd(q, vzero));
        break;
      }
    }
    _mm256_storeu_pd(out.data() + j, r);
  }
  for (; j < count; ++j) {
    out[j] = profile_point_scalar(k, (static_cast<double>(j) - center) * step);
  }
}

}  // namespace bangle::kernels

#else  // !BANGLE_HAVE_X86

namespace bangle::kernels {

void profile_grid_avx2(const ProfileKernel& k, double center, double step, std::size_t count,
                       std::span<double> out) {
  profile_grid_scalar(k, center, step, count, out);
}

}  // namespace bangle::kernels

#endif
