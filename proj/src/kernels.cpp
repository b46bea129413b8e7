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
#include "bangle/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace bangle::kernels {

namespace {

Backend detect_initial() {
  if (const char* e = std::getenv("BANGLE_BACKEND")) {
    if (std::strcmp(e, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(e, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
  }
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_initial()};
  return slot;
}

}  // namespace

bool avx2_supported() {
#if defined(BANGLE_HAVE_X86)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detected_backend() { return detect_initial(); }

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_supported()) {
    throw PreconditionError("AVX2 backend is not supported on this CPU");
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

ProfileKernel lower_profile(const NormSpec& spec, const Vector& x, const Vector& y) {
  require_same_dimension(x, y);
  if (auto d = spec.dimension(); d && *d != x.size()) {
    throw DimensionError("norm spec expects dimension " + std::to_string(*d) +
                         " but vector has dimension " + std::to_string(x.size()));
  }

  ProfileKernel k;
  const auto xs = x.span();
  const auto ys = y.span();
  switch (spec.kind()) {
    case NormKind::Lp:
    case NormKind::WeightedLp: {
      const bool weighted = spec.kind() == NormKind::WeightedLp;
      const auto& w = spec.weights();
      if (spec.p() == 1.0) {
        k.family = ProfileKernel::Family::SumAbs;
        k.u = weighted ? detail::fold_weights(w, xs) : x.coords();
        k.v = weighted ? detail::fold_weights(w, ys) : y.coords();
      } else if (spec.p() == 2.0) {
        k.family = ProfileKernel::Family::Quadratic;
        if (weighted) {
          k.a = detail::weighted_dot(w, xs, xs);
          k.b = 2.0 * detail::weighted_dot(w, xs, ys);
          k.c = detail::weighted_dot(w, ys, ys);
        } else {
          k.a = detail::dot(xs, xs);
          k.b = 2.0 * detail::dot(xs, ys);
          k.c = detail::dot(ys, ys);
        }
      } else {
        k.family = ProfileKernel::Family::PowSum;
        k.u = x.coords();
        k.v = y.coords();
        if (weighted) k.w = w;
        k.p = spec.p();
      }
      break;
    }
    case NormKind::LpInf:
      k.family = ProfileKernel::Family::MaxAbs;
      k.u = x.coords();
      k.v = y.coords();
      break;
    case NormKind::WeightedLpInf:
      k.family = ProfileKernel::Family::MaxAbs;
      k.u = detail::fold_weights(spec.weights(), xs);
      k.v = detail::fold_weights(spec.weights(), ys);
      break;
    case NormKind::InnerProduct: {
      const SymMatrix& g = spec.matrix();
      k.family = ProfileKernel::Family::Quadratic;
      k.a = detail::quad_form(g, xs, xs);
      k.b = 2.0 * detail::quad_form(g, xs, ys);
      k.c = detail::quad_form(g, ys, ys);
      break;
    }
  }
  return k;
}

void profile_grid(const ProfileKernel& k, double center, double step, std::size_t count,
                  std::span<double> out) {
  if (active_backend() == Backend::Avx2 && k.family != ProfileKernel::Family::PowSum) {
    profile_grid_avx2(k, center, step, count, out);
  } else {
    profile_grid_scalar(k, center, step, count, out);
  }
}

}  // namespace bangle::kernels
