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
#include <span>
#include <vector>

#include "bangle/norm.hpp"
#include "bangle/vector.hpp"

namespace bangle::kernels {

enum class Backend { Scalar, Avx2 };

// Profile of a norm along a line, lowered to a flat coefficient form that the
// batch kernels can evaluate without touching NormSpec:
//   SumAbs    f(l) = sum_i |u_i + l v_i|
//   MaxAbs    f(l) = max_i |u_i + l v_i|
//   PowSum    f(l) = (sum_i w_i |u_i + l v_i|^p)^(1/p)   (scalar path only)
//   Quadratic f(l) = sqrt(max(a + l b + l^2 c, 0))
struct ProfileKernel {
  enum class Family { SumAbs, MaxAbs, PowSum, Quadratic };
  Family family = Family::SumAbs;
  std::vector<double> u, v;
  std::vector<double> w;  // PowSum weights; empty means unit weights
  double p = 0.0;         // PowSum exponent
  double a = 0.0, b = 0.0, c = 0.0;
};

// Lowers f(l) = ||x + l y|| for the given spec. The lowering reuses the same
// reduction routines as norm_eval, so evaluating the kernel at l = 0
// reproduces norm_eval(spec, x) bit for bit.
ProfileKernel lower_profile(const NormSpec& spec, const Vector& x, const Vector& y);

// Evaluates f at the uniform grid l_j = (j - center) * step for j in
// [0, count), writing into out[0..count). All backends produce bitwise
// identical output; the dispatcher routes to the active one. PowSum always
// runs on the scalar path.
void profile_grid(const ProfileKernel& k, double center, double step, std::size_t count,
                  std::span<double> out);

// Backend-pinned variants, used directly by the equivalence tests.
void profile_grid_scalar(const ProfileKernel& k, double center, double step, std::size_t count,
                         std::span<double> out);
void profile_grid_avx2(const ProfileKernel& k, double center, double step, std::size_t count,
                       std::span<double> out);

// Single grid point on the scalar path (also the tail of the AVX2 path).
double profile_point_scalar(const ProfileKernel& k, double lambda);

bool avx2_supported();
Backend detected_backend();  // CPU detection; BANGLE_BACKEND=scalar|avx2 overrides
Backend active_backend();
void set_backend(Backend b);

}  // namespace bangle::kernels
