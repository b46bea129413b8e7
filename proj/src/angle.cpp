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
#include "bangle/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bangle {

namespace {

void require_nonzero(const Vector& v, const char* role) {
  if (v.is_zero()) throw PreconditionError(std::string(role) + " must be nonzero");
}

AngleClass class_from_shape(IntervalShape s) {
  switch (s) {
    case IntervalShape::NegativeSide:
      return AngleClass::ProperAcute;
    case IntervalShape::PositiveSide:
      return AngleClass::ProperObtuse;
    case IntervalShape::Empty:
      break;
  }
  return AngleClass::Orthogonal;
}

double class_sign(AngleClass c) {
  switch (c) {
    case AngleClass::ProperAcute:
      return 1.0;
    case AngleClass::ProperObtuse:
      return -1.0;
    case AngleClass::Orthogonal:
      break;
  }
  return 0.0;
}

int acuteness_rank(AngleClass c) {
  switch (c) {
    case AngleClass::ProperAcute:
      return 2;
    case AngleClass::Orthogonal:
      return 1;
    case AngleClass::ProperObtuse:
      break;
  }
  return 0;
}

struct NormalizedSolve {
  AngleClass cls = AngleClass::Orthogonal;
  double gamma_hat = 0.0;
  double k = 0.0;
};

NormalizedSolve solve_normalized(const NormSpec& spec, const Vector& x_hat, const Vector& y_hat,
                                 double tol) {
  NormalizedSolve out;
  const SublevelInterval si = sublevel_interval(spec, x_hat, y_hat, tol);
  out.cls = class_from_shape(si.shape);
  out.gamma_hat = si.gamma;
  out.k = std::clamp(class_sign(out.cls) * 0.5 * si.gamma, -1.0, 1.0);
  return out;
}

double clamped_arccos(double value) {
  return std::acos(std::clamp(value, -1.0, 1.0));
}

Comparison compare_normalized(const NormalizedSolve& first, const NormalizedSolve& second,
                              double tie_tol) {
  Comparison c;
  c.gamma_hat_first = first.gamma_hat;
  c.gamma_hat_second = second.gamma_hat;
  c.class_first = first.cls;
  c.class_second = second.cls;
  c.tie_tolerance = tie_tol;
  if (first.cls != second.cls) {
    c.mixed_classes = true;
    c.verdict = acuteness_rank(first.cls) > acuteness_rank(second.cls) ? Verdict::MoreAcute
                                                                       : Verdict::MoreObtuse;
    return c;
  }
  if (first.cls == AngleClass::Orthogonal) {
    c.verdict = Verdict::Same;
    return c;
  }
  const double diff = first.gamma_hat - second.gamma_hat;
  if (std::abs(diff) <= tie_tol) {
    c.verdict = Verdict::Same;
  } else if (first.cls == AngleClass::ProperAcute) {
    c.verdict = diff > 0.0 ? Verdict::MoreAcute : Verdict::MoreObtuse;
  } else {
    // Among proper-obtuse angles a wider failure interval is more obtuse.
    c.verdict = diff > 0.0 ? Verdict::MoreObtuse : Verdict::MoreAcute;
  }
  return c;
}

}  // namespace

std::string to_string(AngleClass c) {
  switch (c) {
    case AngleClass::ProperAcute:
      return "ProperAcute";
    case AngleClass::Orthogonal:
      return "Orthogonal";
    case AngleClass::ProperObtuse:
      break;
  }
  return "ProperObtuse";
}

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::ExactPL:
      return "ExactPL";
    case SolveMethod::ExactQuadratic:
      return "ExactQuadratic";
    case SolveMethod::Bisection:
      break;
  }
  return "Bisection";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::MoreAcute:
      return "MoreAcute";
    case Verdict::Same:
      return "Same";
    case Verdict::MoreObtuse:
      break;
  }
  return "MoreObtuse";
}

AngleClass classify(const NormSpec& spec, const Vector& x, const Vector& y, double /*tol*/) {
  require_same_dimension(x, y);
  if (x.is_zero() || y.is_zero()) return AngleClass::Orthogonal;
  const DerivativePair d = one_sided_derivatives(spec, x, y);
  const double margin = orthogonality_margin(spec, y);
  if (d.d_minus > margin) return AngleClass::ProperAcute;
  if (d.d_plus < -margin) return AngleClass::ProperObtuse;
  return AngleClass::Orthogonal;
}

double gamma(const NormSpec& spec, const Vector& x, const Vector& y, double tol) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  const SublevelInterval si = sublevel_interval(spec, x, y, tol);
  return si.shape == IntervalShape::Empty ? 0.0 : si.gamma;
}

double gamma_star(const NormSpec& spec, const Vector& x, const Vector& y, double tol) {
  const double g = gamma(spec, x, y, tol);
  return norm_eval(spec, y) / norm_eval(spec, x) * g;
}

double cosine_k(const NormSpec& spec, const Vector& x, const Vector& y, double tol) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  return solve_normalized(spec, normalize(spec, x), normalize(spec, y), tol).k;
}

AngleReport angle_report(const NormSpec& spec, const Vector& x, const Vector& y, double tol) {
  require_same_dimension(x, y);
  AngleReport r;
  r.method = method_for(spec);
  r.norm_x = norm_eval(spec, x);
  r.norm_y = norm_eval(spec, y);
  if (x.is_zero() || y.is_zero()) return r;

  const SublevelInterval si = sublevel_interval(spec, x, y, tol);
  r.cls = class_from_shape(si.shape);
  r.method = si.method;
  if (r.cls == AngleClass::Orthogonal) return r;

  r.gamma = si.gamma;
  r.gamma_star = r.norm_y / r.norm_x * r.gamma;
  const NormalizedSolve hat = solve_normalized(spec, normalize(spec, x), normalize(spec, y), tol);
  r.gamma_hat = hat.gamma_hat;
  r.k = std::clamp(class_sign(r.cls) * 0.5 * hat.gamma_hat, -1.0, 1.0);
  return r;
}

Comparison compare_same_base(const NormSpec& spec, const Vector& x, const Vector& y1,
                             const Vector& y2, double tie_tol, double tol) {
  require_nonzero(x, "x");
  require_nonzero(y1, "y1");
  require_nonzero(y2, "y2");
  const Vector x_hat = normalize(spec, x);
  const NormalizedSolve first = solve_normalized(spec, x_hat, normalize(spec, y1), tol);
  const NormalizedSolve second = solve_normalized(spec, x_hat, normalize(spec, y2), tol);
  return compare_normalized(first, second, tie_tol);
}

Comparison compare_same_target(const NormSpec& spec, const Vector& x1, const Vector& x2,
                               const Vector& y, double tie_tol, double tol) {
  require_nonzero(x1, "x1");
  require_nonzero(x2, "x2");
  require_nonzero(y, "y");
  const Vector y_hat = normalize(spec, y);
  const NormalizedSolve first = solve_normalized(spec, normalize(spec, x1), y_hat, tol);
  const NormalizedSolve second = solve_normalized(spec, normalize(spec, x2), y_hat, tol);
  return compare_normalized(first, second, tie_tol);
}

double pythagorean_angle(const NormSpec& spec, const Vector& x, const Vector& y) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  const double nx = norm_eval(spec, x);
  const double ny = norm_eval(spec, y);
  const double nxy = norm_eval(spec, add_scaled(x, -1.0, y));
  return clamped_arccos((nx * nx + ny * ny - nxy * nxy) / (2.0 * nx * ny));
}

double isosceles_angle(const NormSpec& spec, const Vector& x, const Vector& y) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  const double nx = norm_eval(spec, x);
  const double ny = norm_eval(spec, y);
  const double nsum = norm_eval(spec, add_scaled(x, 1.0, y));
  const double ndiff = norm_eval(spec, add_scaled(x, -1.0, y));
  return clamped_arccos((nsum * nsum - ndiff * ndiff) / (4.0 * nx * ny));
}

std::vector<SweepRow> sweep_k(const NormSpec& spec, const Vector& x,
                              std::span<const double> thetas, double tol) {
  if (x.size() != 2) throw DimensionError("sweep requires a 2-dimensional base vector");
  require_nonzero(x, "x");
  constexpr double pi = std::numbers::pi;
  const Vector x_hat = normalize(spec, x);
  std::vector<SweepRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    if (!std::isfinite(theta) || theta <= -pi - 1e-9 || theta > pi + 1e-9) {
      throw PreconditionError("theta must lie in (-pi, pi]");
    }
    const Vector y{std::cos(theta), std::sin(theta)};
    const NormalizedSolve s = solve_normalized(spec, x_hat, normalize(spec, y), tol);
    rows.push_back({theta, s.k, s.cls, s.gamma_hat});
  }
  return rows;
}

}  // namespace bangle
