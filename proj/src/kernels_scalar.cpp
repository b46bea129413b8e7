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

// Scalar reference kernels. This translation unit is compiled with
// -ffp-contract=off and spells every fused multiply-add explicitly, so the
// SIMD variants can reproduce it operation for operation. Do not reorder the
// arithmetic here without mirroring the change in kernels_avx2.cpp.
#include <cmath>

#include "bangle/kernels.hpp"

namespace bangle::kernels {

double profile_point_scalar(const ProfileKernel& k, double lambda) {
  switch (k.family) {
    case ProfileKernel::Family::SumAbs: {
      double acc = 0.0;
      for (std::size_t i = 0; i < k.u.size(); ++i) {
        acc += std::abs(std::fma(lambda, k.v[i], k.u[i]));
      }
      return acc;
    }
    case ProfileKernel::Family::MaxAbs: {
      double m = 0.0;
      for (std::size_t i = 0; i < k.u.size(); ++i) {
        m = std::max(m, std::abs(std::fma(lambda, k.v[i], k.u[i])));
      }
      return m;
    }
    case ProfileKernel::Family::Quadratic: {
      double q = std::fma(lambda, std::fma(lambda, k.c, k.b), k.a);
      q = (q > 0.0) ? q : 0.0;  // cancellation guard, mirrors max_pd(q, 0)
      return std::sqrt(q);
    }
    case ProfileKernel::Family::PowSum: {
      // Materializes x + lambda*y and reuses the norm_eval reduction, so the
      // grid value at lambda = 0 is norm_eval(x) bit for bit.
      constexpr std::size_t kStack = 32;
      double stack[kStack];
      std::vector<double> heap;
      const std::size_t n = k.u.size();
      double* t = stack;
      if (n > kStack) {
        heap.resize(n);
        t = heap.data();
      }
      for (std::size_t i = 0; i < n; ++i) t[i] = k.u[i] + lambda * k.v[i];
      return detail::powsum_norm({t, n}, k.w, k.p);
    }
  }
  return 0.0;
}

void profile_grid_scalar(const ProfileKernel& k, double center, double step, std::size_t count,
                         std::span<double> out) {
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = profile_point_scalar(k, (static_cast<double>(j) - center) * step);
  }
}

}  // namespace bangle::kernels
