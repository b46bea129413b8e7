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
#include "bangle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "bangle/angle.hpp"
#include "bangle/oracle.hpp"
#include "bangle/profile.hpp"

namespace bangle {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// One trial; returns true on pass, filling msg on failure.
using Trial = std::function<bool(CaseGenerator&, std::string&)>;

void run_property(VerifySummary& summary, const std::string& name, const NormSpec& spec,
                  const VerifyOptions& opt, int trials, const Trial& trial) {
  PropertyResult result;
  result.name = name;
  result.spec_text = format_norm_spec(spec);
  result.trials = trials;
  CaseGenerator gen(opt.seed ^ fnv1a(result.spec_text + "/" + name));
  for (int t = 0; t < trials; ++t) {
    std::string msg;
    bool ok = false;
    try {
      ok = trial(gen, msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) {
        result.first_failure = "trial " + std::to_string(t) + ": " + msg;
      }
    }
  }
  summary.properties.push_back(std::move(result));
}

struct Pair {
  Vector x, y;
};

Pair random_pair(CaseGenerator& gen, const NormSpec& spec) {
  const std::size_t dim = gen.pick_dimension(spec);
  Vector x = gen.random_vector(spec, dim);
  Vector y = gen.random_vector(spec, dim);
  return {std::move(x), std::move(y)};
}

std::string describe(const NormSpec& spec, const Pair& p) {
  return "x=(" + format_vector(p.x) + ") y=(" + format_vector(p.y) + ") norm=" +
         format_norm_spec(spec);
}

// Pairs whose profile derivative at 0 sits deep inside one class; the
// scaling-law checks need this margin because gamma is ill-conditioned in
// floating point when the pair is nearly orthogonal.
bool well_separated(const NormSpec& spec, const Pair& p) {
  const DerivativePair d = one_sided_derivatives(spec, p.x, p.y);
  const double floor = 1e-3 * norm_eval(spec, p.y);
  return d.d_minus > floor || d.d_plus < -floor;
}

double side_signed_gamma(const SublevelInterval& si) {
  switch (si.shape) {
    case IntervalShape::Empty:
      return 0.0;
    case IntervalShape::NegativeSide:
      return -si.gamma;
    case IntervalShape::PositiveSide:
      break;
  }
  return si.gamma;
}

}  // namespace

int VerifySummary::total_failures() const {
  int total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

std::vector<NormSpec> default_verify_specs() {
  return {
      NormSpec::l1(),
      NormSpec::l2(),
      NormSpec::lp(3.0),
      NormSpec::linf(),
      NormSpec::weighted_lp(2.0, {1.0, 0.5, 2.0}),
      NormSpec::inner_product(SymMatrix(2, {2.0, 0.5, 0.5, 1.0})),
  };
}

VerifySummary run_verify(const std::vector<NormSpec>& specs, const VerifyOptions& opt) {
  VerifySummary summary;
  const bool l2_identity = true;

  for (const NormSpec& spec : specs) {
    const NormClass cls = norm_class(spec);

    run_property(summary, "norm-triangle-inequality", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const double lhs = norm_eval(spec, add_scaled(p.x, 1.0, p.y));
                   const double rhs = norm_eval(spec, p.x) + norm_eval(spec, p.y) + 1e-12;
                   if (lhs <= rhs) return true;
                   msg = describe(spec, p);
                   return false;
                 });

    run_property(summary, "norm-absolute-homogeneity", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const double c = gen.uniform(-10.0, 10.0);
                   const double lhs = norm_eval(spec, scaled(p.x, c));
                   const double rhs = std::abs(c) * norm_eval(spec, p.x);
                   if (std::abs(lhs - rhs) <= 1e-12 * (1.0 + rhs)) return true;
                   msg = describe(spec, p) + " c=" + std::to_string(c);
                   return false;
                 });

    run_property(summary, "norm-positive-definite", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   if (norm_eval(spec, p.x) > 0.0) return true;
                   msg = describe(spec, p);
                   return false;
                 });

    run_property(summary, "sublevel-interval-structure", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const StructureReport rep =
                       verify_sublevel_structure(spec, p.x, p.y, opt.scan_points);
                   if (rep.all()) return true;
                   std::ostringstream os;
                   os << describe(spec, p) << " clauses:" << rep.zero_excluded << rep.one_sided
                      << rep.contiguous << rep.bounded << rep.touches_zero
                      << rep.endpoints_on_level;
                   msg = os.str();
                   return false;
                 });

    run_property(
        summary, "local-global-window", spec, opt, opt.trials,
        [&](CaseGenerator& gen, std::string& msg) {
          const Pair p = random_pair(gen, spec);
          const ScanResult scan = grid_scan(spec, p.x, p.y, opt.scan_points);
          const double delta = gen.uniform(10.0 * scan.grid_step, 0.25 * scan.bracket_hi);
          if (!verify_local_global(spec, p.x, p.y, delta, opt.scan_points)) {
            msg = describe(spec, p) + " window implication failed";
            return false;
          }
          // The derivative-sign classification must agree with the scanned
          // shape, modulo intervals thinner than the grid.
          const SublevelInterval si = sublevel_interval(spec, p.x, p.y, opt.tol);
          if (scan.empty()) {
            if (si.shape == IntervalShape::Empty || si.gamma <= 2.0 * scan.grid_step) return true;
            msg = describe(spec, p) + " scan empty but solver gamma=" + std::to_string(si.gamma);
            return false;
          }
          if (si.shape == IntervalShape::Empty) {
            // Solver calls it orthogonal: the scanned dip must be inside the
            // margin-sized band around the level.
            if (scan.norm_x - scan.min_value <= 4e-9 * scan.norm_x) return true;
            msg = describe(spec, p) + " solver empty but scan dips below the level";
            return false;
          }
          if (si.shape == scan.shape()) return true;
          msg = describe(spec, p) + " solver and scan disagree on the side";
          return false;
        });

    run_property(summary, "classification-scaling", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const double a = gen.signed_scalar(0.1, 3.0);
                   const double b = gen.signed_scalar(0.1, 3.0);
                   const AngleClass base = classify(spec, p.x, p.y);
                   const AngleClass scaled_class =
                       classify(spec, scaled(p.x, a), scaled(p.y, b));
                   AngleClass expected = base;
                   if (a * b < 0.0) {
                     if (base == AngleClass::ProperAcute) expected = AngleClass::ProperObtuse;
                     if (base == AngleClass::ProperObtuse) expected = AngleClass::ProperAcute;
                   }
                   if (scaled_class == expected) return true;
                   msg = describe(spec, p) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
                   return false;
                 });

    run_property(summary, "cosine-bound", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const double k = cosine_k(spec, p.x, p.y, opt.tol);
                   if (std::abs(k) <= 1.0) return true;
                   msg = describe(spec, p) + " k=" + std::to_string(k);
                   return false;
                 });

    run_property(summary, "cosine-scaling", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const Pair p = random_pair(gen, spec);
                   const double a = gen.signed_scalar(0.1, 3.0);
                   const double b = gen.signed_scalar(0.1, 3.0);
                   const double k = cosine_k(spec, p.x, p.y, opt.tol);
                   const double ks = cosine_k(spec, scaled(p.x, a), scaled(p.y, b), opt.tol);
                   const double expected = (a * b > 0.0) ? k : -k;
                   if (std::abs(ks - expected) <= 1e-9) return true;
                   msg = describe(spec, p) + " k=" + std::to_string(k) +
                         " scaled=" + std::to_string(ks);
                   return false;
                 });

    run_property(
        summary, "gamma-scaling", spec, opt, opt.trials,
        [&](CaseGenerator& gen, std::string& msg) {
          Pair p = random_pair(gen, spec);
          for (int tries = 0; tries < 50 && !well_separated(spec, p); ++tries) {
            p = random_pair(gen, spec);
          }
          if (!well_separated(spec, p)) return true;  // nothing comparable drawn
          const double a = gen.uniform(0.1, 3.0);
          const double b = gen.uniform(0.1, 3.0);
          const double solver_tol = 1e-13;
          const double g = gamma(spec, p.x, p.y, solver_tol);
          const double gs = gamma(spec, scaled(p.x, a), scaled(p.y, b), solver_tol);
          const double expected = (a / b) * g;
          const double bracket =
              2.0 * norm_eval(spec, scaled(p.x, a)) / norm_eval(spec, scaled(p.y, b));
          const double allowance = 1e-9 * expected + 8.0 * solver_tol * bracket;
          if (std::abs(gs - expected) <= allowance) return true;
          msg = describe(spec, p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                " gamma=" + std::to_string(g) + " scaled=" + std::to_string(gs);
          return false;
        });

    run_property(
        summary, "gamma-star-invariance", spec, opt, opt.trials,
        [&](CaseGenerator& gen, std::string& msg) {
          Pair p = random_pair(gen, spec);
          for (int tries = 0; tries < 50 && !well_separated(spec, p); ++tries) {
            p = random_pair(gen, spec);
          }
          if (!well_separated(spec, p)) return true;
          const double a = gen.uniform(0.1, 3.0);
          const double b = gen.uniform(0.1, 3.0);
          const double solver_tol = 1e-13;
          const double gs1 = gamma_star(spec, p.x, p.y, solver_tol);
          const double gs2 = gamma_star(spec, scaled(p.x, a), scaled(p.y, b), solver_tol);
          // gamma-star is at most 2, so the solver error contributes an
          // absolute term of a few units of solver_tol.
          const double allowance = 1e-9 * gs1 + 64.0 * solver_tol;
          if (std::abs(gs2 - gs1) <= allowance) return true;
          msg = describe(spec, p) + " gs1=" + std::to_string(gs1) +
                " gs2=" + std::to_string(gs2);
          return false;
        });

    run_property(
        summary, "oracle-vs-solver", spec, opt, opt.trials,
        [&](CaseGenerator& gen, std::string& msg) {
          const Pair p = random_pair(gen, spec);
          const SublevelInterval si = sublevel_interval(spec, p.x, p.y, opt.tol);
          const ScanResult scan = grid_scan(spec, p.x, p.y, opt.scan_points);
          const double solver_gamma = si.shape == IntervalShape::Empty ? 0.0 : si.gamma;
          const double oracle_gamma = scan.gamma_estimate();
          const double bracket_width = scan.bracket_hi - scan.bracket_lo;
          const double bound = bracket_width / static_cast<double>(opt.scan_points) +
                               10.0 * opt.tol * (0.5 * bracket_width);
          if (std::abs(solver_gamma - oracle_gamma) <= bound) return true;
          msg = describe(spec, p) + " solver=" + std::to_string(solver_gamma) +
                " oracle=" + std::to_string(oracle_gamma);
          return false;
        });

    if (cls != NormClass::SmoothGeneric) {
      run_property(
          summary, "exact-vs-bisection", spec, opt, opt.trials,
          [&](CaseGenerator& gen, std::string& msg) {
            const Pair p = random_pair(gen, spec);
            const SublevelInterval exact = sublevel_interval(spec, p.x, p.y, opt.tol);
            const SublevelInterval numeric =
                sublevel_interval_bisection(spec, p.x, p.y, opt.tol);
            const double bracket = 2.0 * norm_eval(spec, p.x) / norm_eval(spec, p.y);
            if (exact.shape != numeric.shape) {
              msg = describe(spec, p) + " shapes disagree";
              return false;
            }
            if (std::abs(side_signed_gamma(exact) - side_signed_gamma(numeric)) <=
                10.0 * opt.tol * bracket) {
              return true;
            }
            msg = describe(spec, p) + " exact=" + std::to_string(exact.gamma) +
                  " bisection=" + std::to_string(numeric.gamma);
            return false;
          });
    }

    run_property(summary, "comparison-antisymmetry", spec, opt, opt.trials,
                 [&](CaseGenerator& gen, std::string& msg) {
                   const std::size_t dim = gen.pick_dimension(spec);
                   const Vector x = gen.random_vector(spec, dim);
                   const Vector y1 = gen.random_vector(spec, dim);
                   const Vector y2 = gen.random_vector(spec, dim);
                   const Comparison fwd = compare_same_base(spec, x, y1, y2);
                   const Comparison rev = compare_same_base(spec, x, y2, y1);
                   const bool ok =
                       (fwd.verdict == Verdict::Same && rev.verdict == Verdict::Same) ||
                       (fwd.verdict == Verdict::MoreAcute && rev.verdict == Verdict::MoreObtuse) ||
                       (fwd.verdict == Verdict::MoreObtuse && rev.verdict == Verdict::MoreAcute);
                   if (ok) return true;
                   msg = "x=(" + format_vector(x) + ") y1=(" + format_vector(y1) + ") y2=(" +
                         format_vector(y2) + ")";
                   return false;
                 });

    if (spec == NormSpec::l2() && l2_identity) {
      run_property(summary, "l2-matches-identity-inner-product", spec, opt, opt.trials,
                   [&](CaseGenerator& gen, std::string& msg) {
                     const Pair p = random_pair(gen, spec);
                     const NormSpec ip = NormSpec::inner_product(SymMatrix::identity(p.x.size()));
                     const double a = norm_eval(spec, p.x);
                     const double b = norm_eval(ip, p.x);
                     if (std::abs(a - b) <= 1e-12 * (1.0 + a)) return true;
                     msg = describe(spec, p);
                     return false;
                   });

      run_property(summary, "cosine-equals-inner-product", spec, opt, opt.trials,
                   [&](CaseGenerator& gen, std::string& msg) {
                     const Pair p = random_pair(gen, spec);
                     const double k = cosine_k(spec, p.x, p.y, opt.tol);
                     const Vector xh = normalize(spec, p.x);
                     const Vector yh = normalize(spec, p.y);
                     const double expected = detail::dot(xh.span(), yh.span());
                     if (std::abs(k - expected) <= 1e-8) return true;
                     msg = describe(spec, p) + " k=" + std::to_string(k) +
                           " <x^,y^>=" + std::to_string(expected);
                     return false;
                   });

      run_property(
          summary, "comparison-angles-match-arccos-k", spec, opt, opt.trials,
          [&](CaseGenerator& gen, std::string& msg) {
            const Pair p = random_pair(gen, spec);
            const double angle = std::acos(
                std::clamp(cosine_k(spec, p.x, p.y, opt.tol), -1.0, 1.0));
            const double ap = pythagorean_angle(spec, p.x, p.y);
            const double ai = isosceles_angle(spec, p.x, p.y);
            if (std::abs(ap - angle) <= 1e-8 && std::abs(ai - angle) <= 1e-8) return true;
            msg = describe(spec, p) + " acos(k)=" + std::to_string(angle) +
                  " ap=" + std::to_string(ap) + " ai=" + std::to_string(ai);
            return false;
          });
    }

    if (spec == NormSpec::linf()) {
      run_property(summary, "cosine-asymmetry-witness", spec, opt, 1,
                   [&](CaseGenerator&, std::string& msg) {
                     const Vector x{1.0, 0.0};
                     const Vector y{1.0, 1.0};
                     const double kxy = cosine_k(spec, x, y, opt.tol);
                     const double kyx = cosine_k(spec, y, x, opt.tol);
                     if (kxy > 0.0 && kyx == 0.0) return true;
                     msg = "k(x,y)=" + std::to_string(kxy) + " k(y,x)=" + std::to_string(kyx);
                     return false;
                   });
    }
  }
  return summary;
}

VerifySummary run_negative_control(const VerifyOptions& opt) {
  VerifySummary summary;
  const NormSpec tag = NormSpec::l2();  // labelling only; the profile below is not a norm
  run_property(summary, "sublevel-interval-structure(injected-nonconvex)", tag, opt,
               std::max(1, std::min(opt.trials, 16)),
               [&](CaseGenerator& gen, std::string& msg) {
                 const double phase = gen.uniform(2.0, 4.0);
                 const auto fn = [phase](double l) { return 1.0 + 0.5 * std::sin(phase * l); };
                 const StructureReport rep =
                     verify_sublevel_structure_profile(fn, 1.0, phase, 3.0, opt.scan_points);
                 if (rep.all()) return true;  // a pass here is the real failure
                 msg = "non-convex profile correctly flagged";
                 return false;
               });
  return summary;
}

}  // namespace bangle
