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

// Acceptance suite: reference values and end-to-end checks, one line per
// criterion. Exits nonzero if any criterion fails or overruns its budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bangle/angle.hpp"
#include "bangle/norm.hpp"
#include "bangle/oracle.hpp"
#include "bangle/profile.hpp"
#include "bangle/verify.hpp"

using namespace bangle;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& detail, const std::string& msg) {
  if (!ok && detail.empty()) detail = msg;
  return ok;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// 1. Max norm, x = (1,0), y = (a,1): proper acute with failure width exactly 1
//    for every a in (0,1); bisection reproduces it to 1e-8.
bool unit_target_family(std::string& detail) {
  const NormSpec linf = NormSpec::linf();
  const Vector x{1.0, 0.0};
  bool ok = true;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const Vector y{a, 1.0};
    ok &= check(classify(linf, x, y) == AngleClass::ProperAcute, detail,
                "a=" + fmt(a) + " not proper acute");
    const SublevelInterval exact = sublevel_interval_pl_exact(linf, x, y);
    ok &= check(exact.gamma == 1.0, detail, "a=" + fmt(a) + " exact gamma=" + fmt(exact.gamma));
    const SublevelInterval numeric = sublevel_interval_bisection(linf, x, y);
    ok &= check(std::abs(numeric.gamma - 1.0) <= 1e-8, detail,
                "a=" + fmt(a) + " bisection gamma=" + fmt(numeric.gamma));
  }
  return ok;
}

// 2. Max norm, x = (1,0), y = (1,a): width 2 up to a = 1/2, then 1/a.
bool threshold_family(std::string& detail) {
  const NormSpec linf = NormSpec::linf();
  const Vector x{1.0, 0.0};
  bool ok = true;
  for (double a : {0.1, 0.25, 0.5}) {
    const Vector y{1.0, a};
    const double exact = sublevel_interval_pl_exact(linf, x, y).gamma;
    ok &= check(std::abs(exact - 2.0) <= 1e-10, detail, "a=" + fmt(a) + " exact=" + fmt(exact));
    const double numeric = sublevel_interval_bisection(linf, x, y).gamma;
    ok &= check(std::abs(numeric - 2.0) <= 1e-8, detail, "a=" + fmt(a) + " num=" + fmt(numeric));
  }
  for (double a : {0.6, 0.8, 1.0}) {
    const Vector y{1.0, a};
    const double expected = 1.0 / a;
    const double exact = sublevel_interval_pl_exact(linf, x, y).gamma;
    ok &= check(std::abs(exact - expected) <= 1e-10, detail,
                "a=" + fmt(a) + " exact=" + fmt(exact));
    const double numeric = sublevel_interval_bisection(linf, x, y).gamma;
    ok &= check(std::abs(numeric - expected) <= 1e-8, detail,
                "a=" + fmt(a) + " num=" + fmt(numeric));
  }
  return ok;
}

// 3. Euclidean norm: gamma((1,0), (a, sqrt(1-a^2))) = 2a.
bool euclidean_closed_form(std::string& detail) {
  const NormSpec l2 = NormSpec::l2();
  const Vector x{1.0, 0.0};
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const Vector y{a, std::sqrt(1.0 - a * a)};
    const double expected = 2.0 * a;
    const double exact = sublevel_interval_quadratic_exact(l2, x, y).gamma;
    ok &= check(std::abs(exact - expected) <= 1e-10, detail,
                "a=" + fmt(a) + " exact=" + fmt(exact));
    const double numeric = sublevel_interval_bisection(l2, x, y).gamma;
    ok &= check(std::abs(numeric - expected) <= 1e-8, detail,
                "a=" + fmt(a) + " num=" + fmt(numeric));
  }
  return ok;
}

// 4. gamma halves under doubling of the target while gamma_star stays 1, and
//    the comparison sees the same angle.
bool scale_invariant_comparison(std::string& detail) {
  const NormSpec linf = NormSpec::linf();
  const Vector x{1.0, 0.0};
  const Vector y1{1.0, 1.0};
  const Vector y2{2.0, 2.0};
  bool ok = true;
  ok &= check(gamma(linf, x, y1) == 1.0, detail, "gamma(x, y1) != 1");
  ok &= check(gamma(linf, x, y2) == 0.5, detail, "gamma(x, y2) != 1/2");
  ok &= check(std::abs(gamma_star(linf, x, y1) - 1.0) <= 1e-12, detail, "gamma*(x, y1) != 1");
  ok &= check(std::abs(gamma_star(linf, x, y2) - 1.0) <= 1e-12, detail, "gamma*(x, y2) != 1");
  const Comparison c = compare_same_base(linf, x, y1, y2);
  ok &= check(c.verdict == Verdict::Same, detail, "verdict " + to_string(c.verdict));
  return ok;
}

// 5. Sum norm, x = (1,0), y = (cos t, sin t): k is the three-valued step
//    function of t with jumps at +-pi/4 and +-3pi/4.
bool sum_norm_step_function(std::string& detail) {
  const NormSpec l1 = NormSpec::l1();
  const Vector x{1.0, 0.0};
  const double breakpoints[] = {-3.0 * kPi / 4.0, -kPi / 4.0, kPi / 4.0, 3.0 * kPi / 4.0};
  std::vector<double> thetas;
  thetas.reserve(1000);
  for (int j = 1; j <= 1000; ++j) {
    double theta = -kPi + 2.0 * kPi * j / 1000.0;
    for (double b : breakpoints) {
      if (std::abs(theta - b) < 1e-6) theta = b + 2e-6;
    }
    thetas.push_back(theta);
  }
  const auto rows = sweep_k(l1, x, thetas);
  bool ok = true;
  for (const auto& row : rows) {
    const double at = std::abs(row.theta);
    const double expected = at < kPi / 4.0 ? 1.0 : (at <= 3.0 * kPi / 4.0 ? 0.0 : -1.0);
    ok &= check(std::abs(row.k - expected) <= 1e-9, detail,
                "theta=" + fmt(row.theta) + " k=" + fmt(row.k) + " expected=" + fmt(expected));
  }
  return ok;
}

// 6. k is not symmetric: k((1,0),(1,1)) > 0 = k((1,1),(1,0)) on the max norm.
bool asymmetry_witness(std::string& detail) {
  const NormSpec linf = NormSpec::linf();
  const double kxy = cosine_k(linf, Vector{1.0, 0.0}, Vector{1.0, 1.0});
  const double kyx = cosine_k(linf, Vector{1.0, 1.0}, Vector{1.0, 0.0});
  bool ok = check(kxy > 0.0, detail, "k(x,y)=" + fmt(kxy) + " not positive");
  ok &= check(kyx == 0.0, detail, "k(y,x)=" + fmt(kyx) + " not zero");
  return ok;
}

// 7. Full randomized property suite at 500 trials, seed 42.
bool property_suite(std::string& detail) {
  VerifyOptions opt;
  opt.trials = 500;
  opt.seed = 42;
  opt.scan_points = 10000;
  const VerifySummary summary = run_verify(default_verify_specs(), opt);
  if (summary.all_passed()) {
    detail = std::to_string(summary.properties.size()) + " properties passed";
    return true;
  }
  for (const auto& p : summary.properties) {
    if (!p.passed()) {
      detail = p.name + " on " + p.spec_text + ": " + p.first_failure;
      break;
    }
  }
  return false;
}

// 8. Solver gamma within 1e-4 of the 1e4-point grid oracle, 500 random pairs
//    per norm family. Targets are unit vectors and bases are scaled to norm
//    1/4 so the bracket width is 1 and the grid resolves 1e-4.
bool oracle_equivalence(std::string& detail) {
  bool ok = true;
  for (const NormSpec& spec : default_verify_specs()) {
    CaseGenerator gen(0xACCE55ULL);
    for (int t = 0; t < 500; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x_raw = gen.random_vector(spec, dim);
      const Vector y = normalize(spec, gen.random_vector(spec, dim));
      const Vector x = scaled(x_raw, 0.25 / norm_eval(spec, x_raw));
      const SublevelInterval si = sublevel_interval(spec, x, y);
      const double solver = si.shape == IntervalShape::Empty ? 0.0 : si.gamma;
      const ScanResult scan = grid_scan(spec, x, y, 10000);
      const double oracle = scan.gamma_estimate();
      if (std::abs(solver - oracle) > 1e-4) {
        ok = check(false, detail,
                   format_norm_spec(spec) + " x=(" + format_vector(x) + ") y=(" +
                       format_vector(y) + ") solver=" + fmt(solver) + " oracle=" + fmt(oracle));
      }
    }
  }
  return ok;
}

// 9. On the Euclidean norm the cosine analog is the inner product of the
//    normalized pair.
bool cosine_is_inner_product(std::string& detail) {
  const NormSpec l2 = NormSpec::l2();
  CaseGenerator gen(0xC05ULL);
  bool ok = true;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = gen.pick_dimension(l2);
    const Vector x = gen.random_vector(l2, dim);
    const Vector y = gen.random_vector(l2, dim);
    const double k = cosine_k(l2, x, y);
    const Vector xh = normalize(l2, x);
    const Vector yh = normalize(l2, y);
    const double expected = detail::dot(xh.span(), yh.span());
    if (std::abs(k - expected) > 1e-8) {
      ok = check(false, detail,
                 "x=(" + format_vector(x) + ") y=(" + format_vector(y) + ") k=" + fmt(k) +
                     " <x^,y^>=" + fmt(expected));
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"max-norm unit-target family: gamma = 1", 1.0, unit_target_family},
      {"max-norm threshold family: gamma = min(2, 1/a)", 1.0, threshold_family},
      {"euclidean closed form: gamma = 2a", 1.0, euclidean_closed_form},
      {"scale-invariant comparison: gamma* = 1 on both", 1.0, scale_invariant_comparison},
      {"sum-norm sweep matches the step function", 5.0, sum_norm_step_function},
      {"cosine asymmetry witness", 1.0, asymmetry_witness},
      {"randomized property suite (500 trials, seed 42)", 60.0, property_suite},
      {"oracle equivalence within 1e-4", 60.0, oracle_equivalence},
      {"euclidean cosine equals the inner product", 60.0, cosine_is_inner_product},
  };

  bool all_ok = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
                fmt(c.budget_seconds) + "s";
    }
    std::printf("[%d/9] %s  %-48s (%.2fs)\n", index, ok ? "PASS" : "FAIL", c.name.c_str(),
                seconds);
    if (!detail.empty()) std::printf("      %s\n", detail.c_str());
    all_ok &= ok;
  }
  std::printf("RESULT: %s\n", all_ok ? "9/9 criteria passed" : "FAIL");
  return all_ok ? 0 : 1;
}
