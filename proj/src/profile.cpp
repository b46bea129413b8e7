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
#include "bangle/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace bangle {

namespace {

void require_nonzero(const Vector& x, const Vector& y) {
  if (x.is_zero() || y.is_zero()) throw PreconditionError("vectors must be nonzero");
}

// Piecewise-linear profile data: f(l) = sum_i |u_i + l v_i| (sum type) or
// f(l) = max_i |u_i + l v_i| (max type), with weights folded into u, v.
struct PiecewiseProfile {
  std::vector<double> u, v;
  bool max_type = false;
};

PiecewiseProfile fold_piecewise(const NormSpec& spec, const Vector& x, const Vector& y) {
  PiecewiseProfile f;
  switch (spec.kind()) {
    case NormKind::Lp:
      f.u = x.coords();
      f.v = y.coords();
      f.max_type = false;
      break;
    case NormKind::LpInf:
      f.u = x.coords();
      f.v = y.coords();
      f.max_type = true;
      break;
    case NormKind::WeightedLp:
      f.u = detail::fold_weights(spec.weights(), x.span());
      f.v = detail::fold_weights(spec.weights(), y.span());
      f.max_type = false;
      break;
    case NormKind::WeightedLpInf:
      f.u = detail::fold_weights(spec.weights(), x.span());
      f.v = detail::fold_weights(spec.weights(), y.span());
      f.max_type = true;
      break;
    default:
      throw PreconditionError("spec is not piecewise linear");
  }
  return f;
}

DerivativePair piecewise_derivatives(const PiecewiseProfile& f) {
  DerivativePair d;
  const std::size_t n = f.u.size();
  if (!f.max_type) {
    double base = 0.0, spread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.u[i] > 0.0) {
        base += f.v[i];
      } else if (f.u[i] < 0.0) {
        base -= f.v[i];
      } else {
        spread += std::abs(f.v[i]);
      }
    }
    d.d_minus = base - spread;
    d.d_plus = base + spread;
  } else {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(f.u[i]));
    // Branches tied with the max (within rounding) all shape the kink at 0.
    const double thresh = m * (1.0 - 1e-12);
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(f.u[i]) < thresh) continue;
      const double slope = f.u[i] >= 0.0 ? f.v[i] : -f.v[i];
      if (first) {
        lo = hi = slope;
        first = false;
      } else {
        lo = std::min(lo, slope);
        hi = std::max(hi, slope);
      }
    }
    d.d_minus = lo;
    d.d_plus = hi;
  }
  return d;
}

// Affine representation A + B*l of the profile on the linear piece
// containing lambda.
std::pair<double, double> piecewise_affine_at(const PiecewiseProfile& f, double lambda) {
  const std::size_t n = f.u.size();
  if (!f.max_type) {
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.u[i] + lambda * f.v[i] >= 0.0) {
        a += f.u[i];
        b += f.v[i];
      } else {
        a -= f.u[i];
        b -= f.v[i];
      }
    }
    return {a, b};
  }
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::abs(f.u[i] + lambda * f.v[i]);
    if (t > best_val) {
      best_val = t;
      best = i;
    }
  }
  const double s = (f.u[best] + lambda * f.v[best]) >= 0.0 ? 1.0 : -1.0;
  return {s * f.u[best], s * f.v[best]};
}

// Boundary of the strict sublevel set on the negative side: walks the affine
// pieces leftwards from 0 and solves f = norm_x on the first piece that
// climbs back to the level. The sentinel sits beyond both the boundedness
// radius 2||x||/||y|| and every breakpoint, so each visited piece is
// genuinely affine.
double piecewise_solve_negative(const PiecewiseProfile& f, double norm_x, double bracket) {
  const std::size_t n = f.u.size();
  std::vector<double> bps;
  auto push = [&bps](double t) {
    if (std::isfinite(t) && t < 0.0) bps.push_back(t);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (f.v[i] != 0.0) push(-f.u[i] / f.v[i]);
  }
  if (f.max_type) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dd = f.v[i] - f.v[j];
        if (dd != 0.0) push((f.u[j] - f.u[i]) / dd);
        const double ds = f.v[i] + f.v[j];
        if (ds != 0.0) push(-(f.u[i] + f.u[j]) / ds);
      }
    }
  }
  double sentinel = -(bracket + 1.0);
  for (double b : bps) sentinel = std::min(sentinel, b - 1.0);
  bps.push_back(sentinel);
  std::sort(bps.begin(), bps.end(), std::greater<double>());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  double prev = 0.0;
  for (double b : bps) {
    const auto [a, slope] = piecewise_affine_at(f, 0.5 * (prev + b));
    const double fb = a + slope * b;
    if (fb < norm_x) {
      prev = b;
      continue;
    }
    if (slope == 0.0) return -prev;  // flat piece already on the level
    double lambda = (norm_x - a) / slope;
    lambda = std::min(std::max(lambda, b), prev);
    return -lambda;
  }
  throw ConvergenceError("piecewise-linear sublevel boundary not found");
}

// <x, y> under the quadratic flavor of the spec.
double quadratic_inner(const NormSpec& spec, const Vector& x, const Vector& y) {
  switch (spec.kind()) {
    case NormKind::Lp:
      return detail::dot(x.span(), y.span());
    case NormKind::WeightedLp:
      return detail::weighted_dot(spec.weights(), x.span(), y.span());
    case NormKind::InnerProduct:
      return detail::quad_form(spec.matrix(), x.span(), y.span());
    default:
      throw PreconditionError("spec is not quadratic");
  }
}

IntervalShape side_from(const DerivativePair& d, double margin) {
  if (d.d_minus > margin) return IntervalShape::NegativeSide;
  if (d.d_plus < -margin) return IntervalShape::PositiveSide;
  return IntervalShape::Empty;
}

}  // namespace

double profile_eval(const NormSpec& spec, const Vector& x, const Vector& y, double lambda) {
  if (!std::isfinite(lambda)) throw PreconditionError("lambda must be finite");
  return norm_eval(spec, add_scaled(x, lambda, y));
}

double orthogonality_margin(const NormSpec& spec, const Vector& y) {
  return 1e-9 * norm_eval(spec, y);
}

SolveMethod method_for(const NormSpec& spec) {
  switch (norm_class(spec)) {
    case NormClass::PiecewiseLinear:
      return SolveMethod::ExactPL;
    case NormClass::Quadratic:
      return SolveMethod::ExactQuadratic;
    case NormClass::SmoothGeneric:
      return SolveMethod::Bisection;
  }
  return SolveMethod::Bisection;
}

DerivativePair one_sided_derivatives(const NormSpec& spec, const Vector& x, const Vector& y) {
  require_same_dimension(x, y);
  require_nonzero(x, y);
  switch (norm_class(spec)) {
    case NormClass::PiecewiseLinear:
      return piecewise_derivatives(fold_piecewise(spec, x, y));
    case NormClass::Quadratic: {
      DerivativePair d;
      const double slope = quadratic_inner(spec, x, y) / norm_eval(spec, x);
      d.d_minus = d.d_plus = slope;
      return d;
    }
    case NormClass::SmoothGeneric:
      break;
  }
  // One-sided difference quotients shrink monotonically toward the true
  // derivative as h decreases (convexity); keep the smallest step.
  const double f0 = norm_eval(spec, x);
  const double scale = f0 / norm_eval(spec, y);
  DerivativePair d;
  d.exact = false;
  for (double factor : {1e-4, 1e-6, 1e-8}) {
    const double h = factor * scale;
    d.d_plus = (profile_eval(spec, x, y, h) - f0) / h;
    d.d_minus = (f0 - profile_eval(spec, x, y, -h)) / h;
    d.fd_step = h;
  }
  if (d.d_minus > d.d_plus) {
    // Pure rounding noise; convexity guarantees the order.
    const double mid = 0.5 * (d.d_minus + d.d_plus);
    d.d_minus = d.d_plus = mid;
  }
  return d;
}

SublevelInterval sublevel_interval_pl_exact(const NormSpec& spec, const Vector& x,
                                            const Vector& y) {
  require_same_dimension(x, y);
  require_nonzero(x, y);
  if (norm_class(spec) != NormClass::PiecewiseLinear) {
    throw PreconditionError("spec is not piecewise linear");
  }
  PiecewiseProfile f = fold_piecewise(spec, x, y);
  const DerivativePair d = piecewise_derivatives(f);
  const double norm_x = norm_eval(spec, x);
  const double norm_y = norm_eval(spec, y);

  SublevelInterval out;
  out.method = SolveMethod::ExactPL;
  out.shape = side_from(d, 1e-9 * norm_y);
  if (out.shape == IntervalShape::Empty) return out;

  const double bracket = 2.0 * norm_x / norm_y;
  if (out.shape == IntervalShape::PositiveSide) {
    for (double& t : f.v) t = -t;  // mirror: S(x, -y) = -S(x, y)
  }
  out.gamma = piecewise_solve_negative(f, norm_x, bracket);
  const double at = out.shape == IntervalShape::NegativeSide ? -out.gamma : out.gamma;
  out.endpoint_residual = std::abs(profile_eval(spec, x, y, at) - norm_x);
  return out;
}

SublevelInterval sublevel_interval_quadratic_exact(const NormSpec& spec, const Vector& x,
                                                   const Vector& y) {
  require_same_dimension(x, y);
  require_nonzero(x, y);
  if (norm_class(spec) != NormClass::Quadratic) {
    throw PreconditionError("spec is not quadratic");
  }
  SublevelInterval out;
  out.method = SolveMethod::ExactQuadratic;
  const double ip = quadratic_inner(spec, x, y);
  const double norm_x = norm_eval(spec, x);
  const double norm_y = norm_eval(spec, y);
  if (std::abs(ip) <= 1e-12 * norm_x * norm_y) return out;
  out.shape = ip > 0.0 ? IntervalShape::NegativeSide : IntervalShape::PositiveSide;
  out.gamma = 2.0 * std::abs(ip) / quadratic_inner(spec, y, y);
  const double at = out.shape == IntervalShape::NegativeSide ? -out.gamma : out.gamma;
  out.endpoint_residual = std::abs(profile_eval(spec, x, y, at) - norm_x);
  return out;
}

SublevelInterval sublevel_interval_bisection(const NormSpec& spec, const Vector& x,
                                             const Vector& y, double tol) {
  require_same_dimension(x, y);
  require_nonzero(x, y);
  if (!(tol > 0.0) || !std::isfinite(tol)) throw PreconditionError("tol must be positive");

  const DerivativePair d = one_sided_derivatives(spec, x, y);
  const double norm_x = norm_eval(spec, x);
  const double norm_y = norm_eval(spec, y);

  SublevelInterval out;
  out.method = SolveMethod::Bisection;
  out.shape = side_from(d, 1e-9 * norm_y);
  if (out.shape == IntervalShape::Empty) return out;

  const double sign = out.shape == IntervalShape::NegativeSide ? -1.0 : 1.0;
  auto f_at = [&](double t) { return profile_eval(spec, x, y, sign * t); };

  const double bracket = 2.0 * norm_x / norm_y;
  const double tol_lambda =
      std::max(tol * bracket, 8.0 * std::numeric_limits<double>::epsilon() * bracket);

  // Interior point: probe magnitudes geometrically upward from the tolerance
  // scale, then downward in case the interval is thinner than that.
  double inner = 0.0;
  for (double t = std::min(tol_lambda, 0.5 * bracket); t < bracket; t *= 2.0) {
    if (f_at(t) < norm_x) {
      inner = t;
      break;
    }
  }
  if (inner == 0.0) {
    double t = 0.5 * std::min(tol_lambda, 0.5 * bracket);
    for (int i = 0; i < 60 && t > 0.0; ++i, t *= 0.5) {
      if (f_at(t) < norm_x) {
        inner = t;
        break;
      }
    }
  }
  if (inner == 0.0) {
    throw ConvergenceError(
        "no interior sublevel point found; the profile dips below ||x|| too shallowly to "
        "resolve in double precision");
  }

  double lo = inner;        // strictly inside S
  double hi = bracket;      // at or beyond the boundary
  int iterations = 0;
  while (hi - lo > tol_lambda && iterations++ < kMaxBisectIterations) {
    const double mid = 0.5 * (lo + hi);
    if (f_at(mid) < norm_x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.gamma = 0.5 * (lo + hi);
  out.endpoint_residual = std::abs(f_at(out.gamma) - norm_x);
  return out;
}

SublevelInterval sublevel_interval(const NormSpec& spec, const Vector& x, const Vector& y,
                                   double tol) {
  require_same_dimension(x, y);
  require_nonzero(x, y);
  if (!(tol > 0.0) || !std::isfinite(tol)) throw PreconditionError("tol must be positive");
  switch (norm_class(spec)) {
    case NormClass::PiecewiseLinear:
      return sublevel_interval_pl_exact(spec, x, y);
    case NormClass::Quadratic: {
      // The closed form uses a tighter zero threshold than the derivative
      // margin; align the Empty decision with the classification rule.
      const DerivativePair d = one_sided_derivatives(spec, x, y);
      if (side_from(d, orthogonality_margin(spec, y)) == IntervalShape::Empty) {
        SublevelInterval out;
        out.method = SolveMethod::ExactQuadratic;
        return out;
      }
      return sublevel_interval_quadratic_exact(spec, x, y);
    }
    case NormClass::SmoothGeneric:
      return sublevel_interval_bisection(spec, x, y, tol);
  }
  return {};
}

}  // namespace bangle
