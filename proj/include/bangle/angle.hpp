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

#include <span>
#include <string>
#include <vector>

#include "bangle/profile.hpp"

namespace bangle {

// Trichotomy of the Birkhoff angle from x to y: exactly one of the three
// holds for any pair under a fixed norm. The relation is directional;
// classify(x, y) and classify(y, x) can differ.
enum class AngleClass { ProperAcute, Orthogonal, ProperObtuse };

std::string to_string(AngleClass c);
std::string to_string(SolveMethod m);

// x (or y) equal to zero classifies as Orthogonal, since ||x + l y|| >= ||x||
// then holds for every l. Otherwise the sign of the one-sided derivatives of
// the profile at 0 decides, inside the fixed orthogonality margin.
AngleClass classify(const NormSpec& spec, const Vector& x, const Vector& y,
                    double tol = kDefaultTol);

// Width of the interval on which ||x + l y|| < ||x|| fails to hold; 0 when
// x is Birkhoff-orthogonal to y. Rejects zero vectors.
double gamma(const NormSpec& spec, const Vector& x, const Vector& y, double tol = kDefaultTol);

// (||y|| / ||x||) * gamma(x, y); invariant under positive scaling of either
// argument, which makes it the right quantity for comparing angles.
double gamma_star(const NormSpec& spec, const Vector& x, const Vector& y,
                  double tol = kDefaultTol);

// Cosine analog of the angle from x to y: +gamma(x^, y^)/2, 0, or
// -gamma(x^, y^)/2 by class, where x^, y^ are the normalized vectors.
// Always in [-1, 1]; equals <x^, y^> in inner-product spaces.
double cosine_k(const NormSpec& spec, const Vector& x, const Vector& y,
                double tol = kDefaultTol);

// Full diagnostics for one ordered pair.
struct AngleReport {
  AngleClass cls = AngleClass::Orthogonal;
  double gamma = 0.0;
  double gamma_star = 0.0;
  double k = 0.0;
  double gamma_hat = 0.0;  // gamma of the normalized pair
  SolveMethod method = SolveMethod::Bisection;
  double norm_x = 0.0;
  double norm_y = 0.0;
};

// Zero vectors are permitted (they report Orthogonal with zeroed quantities).
AngleReport angle_report(const NormSpec& spec, const Vector& x, const Vector& y,
                         double tol = kDefaultTol);

enum class Verdict { MoreAcute, Same, MoreObtuse };

std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Same;
  double gamma_hat_first = 0.0;
  double gamma_hat_second = 0.0;
  AngleClass class_first = AngleClass::Orthogonal;
  AngleClass class_second = AngleClass::Orthogonal;
  bool mixed_classes = false;
  double tie_tolerance = 0.0;
};

inline constexpr double kDefaultTieTol = 1e-9;

// Compares the angles from x to y1 and from x to y2 by gamma of the
// normalized pairs: within a class of proper-acute angles a larger
// gamma-hat is more acute; within proper-obtuse the ordering inverts.
// Differing classes rank ProperAcute > Orthogonal > ProperObtuse in
// acuteness and set mixed_classes.
Comparison compare_same_base(const NormSpec& spec, const Vector& x, const Vector& y1,
                             const Vector& y2, double tie_tol = kDefaultTieTol,
                             double tol = kDefaultTol);

// Mirror of compare_same_base with the roles of base and target swapped.
Comparison compare_same_target(const NormSpec& spec, const Vector& x1, const Vector& x2,
                               const Vector& y, double tie_tol = kDefaultTieTol,
                               double tol = kDefaultTol);

// Angle between x and y from the norm alone, in [0, pi]:
//   arccos (||x||^2 + ||y||^2 - ||x-y||^2) / (2 ||x|| ||y||)
double pythagorean_angle(const NormSpec& spec, const Vector& x, const Vector& y);

//   arccos (||x+y||^2 - ||x-y||^2) / (4 ||x|| ||y||)
double isosceles_angle(const NormSpec& spec, const Vector& x, const Vector& y);

struct SweepRow {
  double theta = 0.0;
  double k = 0.0;
  AngleClass cls = AngleClass::Orthogonal;
  double gamma_hat = 0.0;
};

// Evaluates k(x, y(theta)) for y(theta) = (cos theta, sin theta) over the
// given grid; x must be 2-dimensional and nonzero, thetas in (-pi, pi].
std::vector<SweepRow> sweep_k(const NormSpec& spec, const Vector& x,
                              std::span<const double> thetas, double tol = kDefaultTol);

}  // namespace bangle
