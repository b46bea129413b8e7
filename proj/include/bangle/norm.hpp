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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bangle/errors.hpp"
#include "bangle/vector.hpp"

namespace bangle {

// Dense symmetric positive-definite matrix for inner-product norms.
// Construction validates symmetry (within 1e-12), stores the symmetrized
// entries, and rejects matrices whose leading principal minors are not all
// strictly positive.
class SymMatrix {
 public:
  SymMatrix(std::size_t n, std::vector<double> entries);

  std::size_t dim() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  const std::vector<double>& entries() const noexcept { return a_; }

  static SymMatrix identity(std::size_t n);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

enum class NormKind { Lp, LpInf, WeightedLp, WeightedLpInf, InnerProduct };

// Solver-routing class of a norm, a pure function of the spec:
// l1/linf profiles are piecewise linear, l2/inner-product profiles are
// square roots of quadratics, everything else is handled numerically.
enum class NormClass { PiecewiseLinear, Quadratic, SmoothGeneric };

// Declarative description of a norm on R^n. p = infinity is a distinct
// kind rather than a floating-point sentinel so that breakpoint logic
// stays exact.
class NormSpec {
 public:
  static NormSpec lp(double p);  // 1 <= p < infinity
  static NormSpec lp_inf();
  static NormSpec l1() { return lp(1.0); }
  static NormSpec l2() { return lp(2.0); }
  static NormSpec linf() { return lp_inf(); }
  static NormSpec weighted_lp(double p, std::vector<double> weights);
  static NormSpec weighted_lp_inf(std::vector<double> weights);
  static NormSpec inner_product(SymMatrix g);

  NormKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }                       // Lp / WeightedLp
  const std::vector<double>& weights() const noexcept { return weights_; }
  const SymMatrix& matrix() const { return *g_; }

  // Fixed dimension implied by the spec, or nullopt when any dimension fits.
  std::optional<std::size_t> dimension() const;

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  NormSpec(NormKind kind, double p, std::vector<double> weights, std::optional<SymMatrix> g)
      : kind_(kind), p_(p), weights_(std::move(weights)), g_(std::move(g)) {}

  NormKind kind_;
  double p_ = 0.0;
  std::vector<double> weights_;
  std::optional<SymMatrix> g_;
};

NormClass norm_class(const NormSpec& spec);

// ||v|| per spec. Zero exactly for the zero vector; throws DimensionError on
// a dimension mismatch. General-p evaluation factors out the largest
// component magnitude so that large inputs cannot overflow.
double norm_eval(const NormSpec& spec, const Vector& v);

// v / ||v||; rejects the zero vector.
Vector normalize(const NormSpec& spec, const Vector& v);

// <x, y> = x^T G y.
double inner_product_eval(const SymMatrix& g, const Vector& x, const Vector& y);

// Norm-spec grammar (ASCII, case-insensitive):
//   "l1" | "l2" | "linf" | "lp:<p>" | "wlp:<p>:[w1,...,wn]" | "ip:[[g11,...],[...]]"
// <p> is a decimal or the keyword "inf". Throws ParseError with the offending
// position; parameter errors (p < 1, non-positive weights, bad matrix) are
// reported the same way.
NormSpec parse_norm_spec(const std::string& text);

// Canonical form of the same grammar; parse_norm_spec(format_norm_spec(s)) == s.
std::string format_norm_spec(const NormSpec& spec);

namespace detail {

// Shared reduction routines. The profile kernels reuse these so that batch
// evaluation at lambda = 0 reproduces norm_eval(x) bit for bit.
double sum_abs(std::span<const double> u);
double max_abs(std::span<const double> u);
double dot(std::span<const double> a, std::span<const double> b);
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
double quad_form(const SymMatrix& g, std::span<const double> a, std::span<const double> b);
// Max-factored (sum_i w_i |u_i|^p)^(1/p); pass an empty w for unit weights.
double powsum_norm(std::span<const double> u, std::span<const double> w, double p);
std::vector<double> fold_weights(std::span<const double> w, std::span<const double> v);

}  // namespace detail

}  // namespace bangle
