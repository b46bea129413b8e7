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

#include "bangle/norm.hpp"
#include "bangle/vector.hpp"

namespace bangle {

// Shape of the strict sublevel set S = {l : f(l) < f(0)} of the radial
// profile f(l) = ||x + l y||. Convexity of the norm forces S to be empty or
// a one-sided open interval touching 0.
enum class IntervalShape { Empty, NegativeSide, PositiveSide };

enum class SolveMethod { ExactPL, ExactQuadratic, Bisection };

struct SublevelInterval {
  IntervalShape shape = IntervalShape::Empty;
  // Interval width: NegativeSide encodes S = (-gamma, 0), PositiveSide
  // S = (0, gamma). Strictly positive unless Empty, and never larger than
  // 2||x||/||y|| plus solver tolerance.
  double gamma = 0.0;
  SolveMethod method = SolveMethod::Bisection;
  double endpoint_residual = 0.0;  // |f(+-gamma) - f(0)|
};

// One-sided derivatives of f at 0. Convexity guarantees d_minus <= d_plus;
// the finite-difference path enforces it against rounding noise.
struct DerivativePair {
  double d_minus = 0.0;
  double d_plus = 0.0;
  bool exact = true;
  double fd_step = 0.0;  // > 0 when finite differences were used
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kMaxBisectIterations = 200;

// f(lambda) = ||x + lambda y||.
double profile_eval(const NormSpec& spec, const Vector& x, const Vector& y, double lambda);

// Derivatives smaller than this margin are treated as zero when classifying;
// fixed at 1e-9 * ||y||, the natural scale of f'.
double orthogonality_margin(const NormSpec& spec, const Vector& y);

// Exact for piecewise-linear norms (active-component analysis at 0) and
// quadratic norms (<x,y>/||x||); monotone one-sided finite differences
// otherwise, at steps {1e-4, 1e-6, 1e-8} * ||x||/||y|| keeping the smallest.
DerivativePair one_sided_derivatives(const NormSpec& spec, const Vector& x, const Vector& y);

SolveMethod method_for(const NormSpec& spec);

// Solves for S. Returns Empty exactly when the derivative test at 0 is
// inside the orthogonality margin; otherwise dispatches on the norm class:
// exact breakpoint walk (piecewise linear), closed form (quadratic), or
// bracketed bisection (everything else). The bisection tolerance is
// tol * 2||x||/||y|| in lambda units.
SublevelInterval sublevel_interval(const NormSpec& spec, const Vector& x, const Vector& y,
                                   double tol = kDefaultTol);

// Piecewise-linear norms only: enumerates the profile's breakpoints
// (component kinks -x_i/y_i, plus pairwise branch crossings for max-type
// norms), walks the affine pieces away from 0, and solves f = ||x|| on the
// crossing piece from its active-branch coefficients. Exact up to rounding.
SublevelInterval sublevel_interval_pl_exact(const NormSpec& spec, const Vector& x,
                                            const Vector& y);

// Quadratic norms only: S has width 2|<x,y>|/||y||^2 on the side opposite the
// sign of <x,y>; empty when |<x,y>| <= 1e-12 ||x|| ||y||.
SublevelInterval sublevel_interval_quadratic_exact(const NormSpec& spec, const Vector& x,
                                                   const Vector& y);

// Generic solver for any norm class: classifies the side from the derivative
// signs, locates an interior sublevel point by geometric probing, and bisects
// the strict predicate f(l) < ||x|| toward the boundary.
SublevelInterval sublevel_interval_bisection(const NormSpec& spec, const Vector& x,
                                             const Vector& y, double tol = kDefaultTol);

}  // namespace bangle
