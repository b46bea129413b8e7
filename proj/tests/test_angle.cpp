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
#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bangle/angle.hpp"
#include "bangle/oracle.hpp"

using namespace bangle;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("angle");

TEST_CASE("classification on the max norm") {
  const NormSpec linf = NormSpec::linf();
  // The diagonal family (c, c) is proper acute from (1, 0) for any c > 0.
  CHECK(classify(linf, Vector{1.0, 0.0}, Vector{1.0, 1.0}) == AngleClass::ProperAcute);
  CHECK(classify(linf, Vector{1.0, 0.0}, Vector{0.25, 0.25}) == AngleClass::ProperAcute);
  CHECK(classify(linf, Vector{1.0, 0.0}, Vector{0.0, 1.0}) == AngleClass::Orthogonal);
  // Orthogonality is directional: (1, 0.5) is orthogonal to (0, 1) but the
  // reversed pair is not.
  CHECK(classify(linf, Vector{1.0, 0.5}, Vector{0.0, 1.0}) == AngleClass::Orthogonal);
  CHECK(classify(linf, Vector{0.0, 1.0}, Vector{1.0, 0.5}) != AngleClass::Orthogonal);
  CHECK(classify(linf, Vector{0.0, 1.0}, Vector{1.0, 0.5}) == AngleClass::ProperAcute);
}

TEST_CASE("zero vectors classify as orthogonal") {
  CHECK(classify(NormSpec::l2(), Vector{0.0, 0.0}, Vector{1.0, 0.0}) == AngleClass::Orthogonal);
  CHECK(classify(NormSpec::l2(), Vector{1.0, 0.0}, Vector{0.0, 0.0}) == AngleClass::Orthogonal);
}

TEST_CASE("gamma on the max norm") {
  const NormSpec linf = NormSpec::linf();
  CHECK(gamma(linf, Vector{1.0, 0.0}, Vector{1.0, 1.0}) == 1.0);
  CHECK(gamma(linf, Vector{1.0, 0.0}, Vector{2.0, 2.0}) == 0.5);
  CHECK_THROWS_AS(gamma(linf, Vector{0.0, 0.0}, Vector{1.0, 1.0}), PreconditionError);
}

TEST_CASE("gamma of a vector with itself is 2") {
  const Vector x{0.7, -0.2};
  CHECK(gamma(NormSpec::l1(), x, x) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gamma(NormSpec::l2(), x, x) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gamma(NormSpec::linf(), x, x) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gamma(NormSpec::lp(3.0), x, x) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(gamma_star(NormSpec::l2(), x, x) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gamma_star is the unit-sphere gamma") {
  const NormSpec linf = NormSpec::linf();
  // (1,0) vs (2,2): gamma halves but gamma_star stays 1, matching (1,1).
  CHECK(gamma_star(linf, Vector{1.0, 0.0}, Vector{2.0, 2.0}) == 1.0);
  CHECK(gamma_star(linf, Vector{1.0, 0.0}, Vector{1.0, 1.0}) == 1.0);

  CaseGenerator gen(31);
  for (int t = 0; t < 200; ++t) {
    const Vector x = gen.random_vector(linf, 2);
    const Vector y = gen.random_vector(linf, 2);
    const double a = gen.uniform(0.1, 3.0);
    const double b = gen.uniform(0.1, 3.0);
    const double g1 = gamma_star(linf, x, y);
    const double g2 = gamma_star(linf, scaled(x, a), scaled(y, b));
    CHECK(g2 == doctest::Approx(g1).epsilon(1e-9));
  }
}

TEST_CASE("cosine_k on the max norm, including the asymmetry witness") {
  const NormSpec linf = NormSpec::linf();
  const Vector x{1.0, 0.0};
  const Vector y{1.0, 1.0};
  CHECK(cosine_k(linf, x, y) == 0.5);
  CHECK(cosine_k(linf, y, x) == 0.0);
}

TEST_CASE("cosine_k on the sum norm follows the three-level step") {
  const NormSpec l1 = NormSpec::l1();
  const Vector x{1.0, 0.0};
  auto k_at = [&](double theta) {
    return cosine_k(l1, x, Vector{std::cos(theta), std::sin(theta)});
  };
  CHECK(k_at(0.1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k_at(kPi / 2.0) == 0.0);
  CHECK(k_at(kPi) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("cosine_k at y = x and y = -x") {
  const Vector x{0.4, 1.1};
  for (const NormSpec& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::linf()}) {
    CHECK(cosine_k(spec, x, x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cosine_k(spec, x, scaled(x, -1.0)) == doctest::Approx(-1.0).epsilon(1e-14));
  }
  CHECK(cosine_k(NormSpec::lp(3.0), x, x) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cosine_k is bounded by 1 on random pairs") {
  const std::vector<NormSpec> specs = {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(),
                                       NormSpec::lp(3.0),
                                       NormSpec::inner_product(SymMatrix(2, {2.0, 0.5, 0.5, 1.0}))};
  for (const NormSpec& spec : specs) {
    CaseGenerator gen(41);
    for (int t = 0; t < 400; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x = gen.random_vector(spec, dim);
      const Vector y = gen.random_vector(spec, dim);
      CHECK(std::abs(cosine_k(spec, x, y)) <= 1.0);
    }
  }
}

TEST_CASE("angle_report bundles consistent quantities") {
  const NormSpec linf = NormSpec::linf();
  const AngleReport r = angle_report(linf, Vector{1.0, 0.0}, Vector{2.0, 2.0});
  CHECK(r.cls == AngleClass::ProperAcute);
  CHECK(r.gamma == 0.5);
  CHECK(r.gamma_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.gamma_hat == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.k == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.method == SolveMethod::ExactPL);
  CHECK(r.norm_x == 1.0);
  CHECK(r.norm_y == 2.0);

  const AngleReport zero = angle_report(linf, Vector{0.0, 0.0}, Vector{1.0, 1.0});
  CHECK(zero.cls == AngleClass::Orthogonal);
  CHECK(zero.gamma == 0.0);
  CHECK(zero.k == 0.0);

  // gamma_star ties to gamma by the norm ratio; k ties to gamma_hat by class.
  CaseGenerator gen(53);
  for (const NormSpec& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::lp(3.0)}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x = gen.random_vector(spec, dim);
      const Vector y = gen.random_vector(spec, dim);
      const AngleReport rep = angle_report(spec, x, y);
      CHECK(rep.gamma_star ==
            doctest::Approx(rep.norm_y / rep.norm_x * rep.gamma).epsilon(1e-12));
      const double sign = rep.cls == AngleClass::ProperAcute
                              ? 1.0
                              : (rep.cls == AngleClass::ProperObtuse ? -1.0 : 0.0);
      CHECK(rep.k == doctest::Approx(sign * 0.5 * rep.gamma_hat).epsilon(1e-12));
      CHECK(std::abs(rep.k) <= 1.0);
    }
  }
}

TEST_CASE("compare_same_base") {
  const NormSpec linf = NormSpec::linf();
  const Vector x{1.0, 0.0};

  const Comparison sharper = compare_same_base(linf, x, Vector{1.0, 0.3}, Vector{1.0, 0.8});
  CHECK(sharper.verdict == Verdict::MoreAcute);
  CHECK(sharper.gamma_hat_first == doctest::Approx(2.0));
  CHECK(sharper.gamma_hat_second == doctest::Approx(1.25));
  CHECK(!sharper.mixed_classes);

  // Positive scalings of the same target compare as the same angle.
  const Comparison same = compare_same_base(linf, x, Vector{1.0, 1.0}, Vector{2.0, 2.0});
  CHECK(same.verdict == Verdict::Same);

  // The (a, 1) family all has gamma_hat 1.
  const Comparison flat = compare_same_base(linf, x, Vector{0.3, 1.0}, Vector{0.7, 1.0});
  CHECK(flat.verdict == Verdict::Same);
}

TEST_CASE("compare_same_target") {
  const NormSpec l2 = NormSpec::l2();
  const Vector y{1.0, 0.0};

  const Comparison c = compare_same_target(l2, Vector{1.0, 0.1}, Vector{1.0, 1.0}, y);
  CHECK(c.verdict == Verdict::MoreAcute);
  // Closed form: gamma_hat = 2 <x^, y^>; check against the grid oracle too.
  const Vector x1_hat = normalize(l2, Vector{1.0, 0.1});
  CHECK(c.gamma_hat_first == doctest::Approx(2.0 * x1_hat[0]).epsilon(1e-12));
  const ScanResult scan = grid_scan(l2, x1_hat, y, 100001);
  CHECK(std::abs(scan.gamma_estimate() - c.gamma_hat_first) <= scan.grid_step);

  const Comparison eq = compare_same_target(l2, Vector{1.0, 1.0}, Vector{1.0, 1.0}, y);
  CHECK(eq.verdict == Verdict::Same);

  const Comparison mixed = compare_same_target(l2, Vector{0.0, 1.0}, Vector{1.0, 1.0}, y);
  CHECK(mixed.mixed_classes);
  CHECK(mixed.class_first == AngleClass::Orthogonal);
  CHECK(mixed.class_second == AngleClass::ProperAcute);
  CHECK(mixed.verdict == Verdict::MoreObtuse);
}

TEST_CASE("obtuse comparisons invert the gamma ordering") {
  const NormSpec l2 = NormSpec::l2();
  const Vector x{1.0, 0.0};
  const Vector y1{-0.9, std::sqrt(1.0 - 0.81)};  // wider failure interval
  const Vector y2{-0.2, std::sqrt(1.0 - 0.04)};
  const Comparison c = compare_same_base(l2, x, y1, y2);
  CHECK(c.class_first == AngleClass::ProperObtuse);
  CHECK(c.class_second == AngleClass::ProperObtuse);
  CHECK(c.gamma_hat_first > c.gamma_hat_second);
  CHECK(c.verdict == Verdict::MoreObtuse);
}

TEST_CASE("comparison is antisymmetric") {
  const NormSpec l1 = NormSpec::l1();
  CaseGenerator gen(61);
  for (int t = 0; t < 200; ++t) {
    const Vector x = gen.random_vector(l1, 3);
    const Vector y1 = gen.random_vector(l1, 3);
    const Vector y2 = gen.random_vector(l1, 3);
    const Comparison fwd = compare_same_base(l1, x, y1, y2);
    const Comparison rev = compare_same_base(l1, x, y2, y1);
    if (fwd.verdict == Verdict::Same) {
      CHECK(rev.verdict == Verdict::Same);
    } else if (fwd.verdict == Verdict::MoreAcute) {
      CHECK(rev.verdict == Verdict::MoreObtuse);
    } else {
      CHECK(rev.verdict == Verdict::MoreAcute);
    }
  }
}

TEST_CASE("pythagorean and isosceles angles") {
  const NormSpec l2 = NormSpec::l2();
  CHECK(pythagorean_angle(l2, Vector{1.0, 0.0}, Vector{0.0, 1.0}) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(pythagorean_angle(l2, Vector{0.3, 0.4}, Vector{0.3, 0.4}) == 0.0);
  CHECK(isosceles_angle(l2, Vector{1.0, 0.0}, Vector{0.0, 1.0}) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(isosceles_angle(l2, Vector{0.3, 0.4}, Vector{0.3, 0.4}) == 0.0);

  // Sum norm: ||x - y|| = 2 drives the argument to -1.
  CHECK(pythagorean_angle(NormSpec::l1(), Vector{1.0, 0.0}, Vector{0.0, 1.0}) ==
        doctest::Approx(kPi).epsilon(1e-15));
  // Max norm: ||x + y|| = ||x - y|| = 1 gives a right angle.
  CHECK(isosceles_angle(NormSpec::linf(), Vector{1.0, 0.0}, Vector{0.0, 1.0}) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-15));

  CHECK_THROWS_AS(pythagorean_angle(l2, Vector{0.0, 0.0}, Vector{1.0, 0.0}), PreconditionError);
}

TEST_CASE("comparison angles agree with arccos(k) on the Euclidean norm") {
  const NormSpec l2 = NormSpec::l2();
  CaseGenerator gen(71);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = gen.pick_dimension(l2);
    const Vector x = gen.random_vector(l2, dim);
    const Vector y = gen.random_vector(l2, dim);
    const double angle = std::acos(std::clamp(cosine_k(l2, x, y), -1.0, 1.0));
    CHECK(pythagorean_angle(l2, x, y) == doctest::Approx(angle).epsilon(1e-8));
    CHECK(isosceles_angle(l2, x, y) == doctest::Approx(angle).epsilon(1e-8));
  }
}

TEST_CASE("sweep_k on the sum norm") {
  const NormSpec l1 = NormSpec::l1();
  const double grid[] = {-7.0 * kPi / 8.0, 0.0, kPi / 2.0};
  const auto rows = sweep_k(l1, Vector{1.0, 0.0}, grid);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].k == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rows[0].cls == AngleClass::ProperObtuse);
  CHECK(rows[1].k == 1.0);
  CHECK(rows[1].cls == AngleClass::ProperAcute);
  CHECK(rows[2].k == 0.0);
  CHECK(rows[2].cls == AngleClass::Orthogonal);
}

TEST_CASE("sweep_k on the Euclidean norm reproduces the cosine") {
  const NormSpec l2 = NormSpec::l2();
  CaseGenerator gen(83);
  std::vector<double> thetas;
  for (int t = 0; t < 200; ++t) {
    double theta = gen.uniform(-kPi + 1e-3, kPi);
    // keep clear of the orthogonality margin at +-pi/2
    if (std::abs(std::abs(theta) - kPi / 2.0) < 1e-6) theta += 1e-4;
    thetas.push_back(theta);
  }
  const auto rows = sweep_k(l2, Vector{1.0, 0.0}, thetas);
  for (const auto& row : rows) {
    CHECK(row.k == doctest::Approx(std::cos(row.theta)).epsilon(1e-9));
  }
}

TEST_CASE("sweep_k on the max norm at the diagonal") {
  // y(pi/4) normalizes to (1, 1) up to one ulp (cos and sin of the rounded
  // pi/4 differ in the last place), so k is 0.5 up to rounding.
  const double grid[] = {kPi / 4.0};
  const auto rows = sweep_k(NormSpec::linf(), Vector{1.0, 0.0}, grid);
  CHECK(rows[0].k == doctest::Approx(0.5).epsilon(1e-12));
  const ScanResult scan =
      grid_scan(NormSpec::linf(), Vector{1.0, 0.0}, Vector{1.0, 1.0}, 100001);
  CHECK(std::abs(scan.gamma_estimate() - rows[0].gamma_hat) <= scan.grid_step);
}

TEST_CASE("sweep_k rejections") {
  const double grid[] = {0.0};
  CHECK_THROWS_AS(sweep_k(NormSpec::l2(), Vector{1.0, 0.0, 0.0}, grid), DimensionError);
  CHECK_THROWS_AS(sweep_k(NormSpec::l2(), Vector{0.0, 0.0}, grid), PreconditionError);
  const double bad[] = {4.0};
  CHECK_THROWS_AS(sweep_k(NormSpec::l2(), Vector{1.0, 0.0}, bad), PreconditionError);
}

TEST_CASE("classification scaling on random pairs") {
  const std::vector<NormSpec> specs = {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(),
                                       NormSpec::lp(3.0)};
  for (const NormSpec& spec : specs) {
    CaseGenerator gen(97);
    for (int t = 0; t < 300; ++t) {
      const std::size_t dim = gen.pick_dimension(spec);
      const Vector x = gen.random_vector(spec, dim);
      const Vector y = gen.random_vector(spec, dim);
      const double a = gen.signed_scalar(0.1, 3.0);
      const double b = gen.signed_scalar(0.1, 3.0);
      const AngleClass base = classify(spec, x, y);
      AngleClass expected = base;
      if (a * b < 0.0) {
        if (base == AngleClass::ProperAcute) expected = AngleClass::ProperObtuse;
        if (base == AngleClass::ProperObtuse) expected = AngleClass::ProperAcute;
      }
      CHECK(classify(spec, scaled(x, a), scaled(y, b)) == expected);
    }
  }
}

TEST_SUITE_END();
