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
#include "bangle/norm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string_view>
#include <system_error>

namespace bangle {

namespace detail {

double sum_abs(std::span<const double> u) {
  double acc = 0.0;
  for (double t : u) acc += std::abs(t);
  return acc;
}

double max_abs(std::span<const double> u) {
  double m = 0.0;
  for (double t : u) m = std::max(m, std::abs(t));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * (a[i] * b[i]);
  return acc;
}

double quad_form(const SymMatrix& g, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = g.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += g.at(i, j) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

double powsum_norm(std::span<const double> u, std::span<const double> w, double p) {
  double m = 0.0;
  for (double t : u) m = std::max(m, std::abs(t));
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = std::abs(u[i]) / m;
    const double term = std::pow(r, p);
    acc += w.empty() ? term : w[i] * term;
  }
  return m * std::pow(acc, 1.0 / p);
}

std::vector<double> fold_weights(std::span<const double> w, std::span<const double> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = w[i] * v[i];
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n_ == 0) throw PreconditionError("matrix must have dimension >= 1");
  if (a_.size() != n_ * n_) throw PreconditionError("matrix entry count does not match dimension");
  double scale = 1.0;
  for (double e : a_) {
    if (!std::isfinite(e)) throw PreconditionError("matrix entries must be finite");
    scale = std::max(scale, std::abs(e));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs(a_[i * n_ + j] - a_[j * n_ + i]) > 1e-12 * scale) {
        throw PreconditionError("matrix is not symmetric");
      }
      const double s = 0.5 * (a_[i * n_ + j] + a_[j * n_ + i]);
      a_[i * n_ + j] = s;
      a_[j * n_ + i] = s;
    }
  }
  // Leading principal minors are all positive iff unpivoted symmetric
  // elimination produces strictly positive pivots.
  std::vector<double> m = a_;
  for (std::size_t k = 0; k < n_; ++k) {
    const double pivot = m[k * n_ + k];
    if (!(pivot > 0.0)) {
      throw PreconditionError("matrix is not positive definite (leading minor " +
                              std::to_string(k + 1) + " is not positive)");
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      const double f = m[i * n_ + k] / pivot;
      for (std::size_t j = k; j < n_; ++j) m[i * n_ + j] -= f * m[k * n_ + j];
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return SymMatrix(n, std::move(e));
}

// ---------------------------------------------------------------------------
// NormSpec

NormSpec NormSpec::lp(double p) {
  if (!std::isfinite(p) || p < 1.0) throw PreconditionError("p must satisfy 1 <= p < infinity");
  return NormSpec(NormKind::Lp, p, {}, std::nullopt);
}

NormSpec NormSpec::lp_inf() { return NormSpec(NormKind::LpInf, 0.0, {}, std::nullopt); }

NormSpec NormSpec::weighted_lp(double p, std::vector<double> weights) {
  if (!std::isfinite(p) || p < 1.0) throw PreconditionError("p must satisfy 1 <= p < infinity");
  if (weights.empty()) throw PreconditionError("weights must have dimension >= 1");
  for (double w : weights) {
    if (!(std::isfinite(w) && w > 0.0)) throw PreconditionError("weights must be strictly positive");
  }
  return NormSpec(NormKind::WeightedLp, p, std::move(weights), std::nullopt);
}

NormSpec NormSpec::weighted_lp_inf(std::vector<double> weights) {
  if (weights.empty()) throw PreconditionError("weights must have dimension >= 1");
  for (double w : weights) {
    if (!(std::isfinite(w) && w > 0.0)) throw PreconditionError("weights must be strictly positive");
  }
  return NormSpec(NormKind::WeightedLpInf, 0.0, std::move(weights), std::nullopt);
}

NormSpec NormSpec::inner_product(SymMatrix g) {
  return NormSpec(NormKind::InnerProduct, 0.0, {}, std::move(g));
}

std::optional<std::size_t> NormSpec::dimension() const {
  switch (kind_) {
    case NormKind::Lp:
    case NormKind::LpInf:
      return std::nullopt;
    case NormKind::WeightedLp:
    case NormKind::WeightedLpInf:
      return weights_.size();
    case NormKind::InnerProduct:
      return g_->dim();
  }
  return std::nullopt;
}

NormClass norm_class(const NormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::LpInf:
    case NormKind::WeightedLpInf:
      return NormClass::PiecewiseLinear;
    case NormKind::InnerProduct:
      return NormClass::Quadratic;
    case NormKind::Lp:
    case NormKind::WeightedLp:
      if (spec.p() == 1.0) return NormClass::PiecewiseLinear;
      if (spec.p() == 2.0) return NormClass::Quadratic;
      return NormClass::SmoothGeneric;
  }
  return NormClass::SmoothGeneric;
}

namespace {

void check_dimension(const NormSpec& spec, const Vector& v) {
  if (auto d = spec.dimension(); d && *d != v.size()) {
    throw DimensionError("norm spec expects dimension " + std::to_string(*d) +
                         " but vector has dimension " + std::to_string(v.size()));
  }
}

}  // namespace

double norm_eval(const NormSpec& spec, const Vector& v) {
  check_dimension(spec, v);
  const auto s = v.span();
  switch (spec.kind()) {
    case NormKind::Lp:
      if (spec.p() == 1.0) return detail::sum_abs(s);
      if (spec.p() == 2.0) return std::sqrt(detail::dot(s, s));
      return detail::powsum_norm(s, {}, spec.p());
    case NormKind::LpInf:
      return detail::max_abs(s);
    case NormKind::WeightedLp: {
      const auto& w = spec.weights();
      if (spec.p() == 1.0) {
        const auto u = detail::fold_weights(w, s);
        return detail::sum_abs(u);
      }
      if (spec.p() == 2.0) return std::sqrt(detail::weighted_dot(w, s, s));
      return detail::powsum_norm(s, w, spec.p());
    }
    case NormKind::WeightedLpInf: {
      const auto u = detail::fold_weights(spec.weights(), s);
      return detail::max_abs(u);
    }
    case NormKind::InnerProduct:
      return std::sqrt(detail::quad_form(spec.matrix(), s, s));
  }
  return 0.0;
}

Vector normalize(const NormSpec& spec, const Vector& v) {
  const double n = norm_eval(spec, v);
  if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
  return Vector(std::move(out));
}

double inner_product_eval(const SymMatrix& g, const Vector& x, const Vector& y) {
  require_same_dimension(x, y);
  if (g.dim() != x.size()) {
    throw DimensionError("matrix dimension " + std::to_string(g.dim()) +
                         " does not match vector dimension " + std::to_string(x.size()));
  }
  return detail::quad_form(g, x.span(), y.span());
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }

  bool keyword(std::string_view k) {
    skip_ws();
    if (pos + k.size() > s.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(s[pos + i])) != k[i]) return false;
    }
    pos += k.size();
    return true;
  }

  double number() {
    skip_ws();
    double value = 0.0;
    auto [next, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a number", pos);
    if (!std::isfinite(value)) throw ParseError("number out of range", pos);
    pos = static_cast<std::size_t>(next - s.data());
    return value;
  }

  void end() {
    skip_ws();
    if (pos != s.size()) throw ParseError("unexpected trailing characters", pos);
  }
};

std::vector<double> number_list(Cursor& c) {
  c.expect('[');
  std::vector<double> out;
  out.push_back(c.number());
  while (c.eat(',')) out.push_back(c.number());
  c.expect(']');
  return out;
}

// <p> is either the keyword "inf" or a decimal >= 1.
struct PValue {
  bool infinite;
  double value;
};

PValue p_value(Cursor& c) {
  c.skip_ws();
  const std::size_t at = c.pos;
  if (c.keyword("inf")) return {true, 0.0};
  const double p = c.number();
  if (p < 1.0) throw ParseError("p must satisfy 1 <= p <= infinity", at);
  return {false, p};
}

}  // namespace

NormSpec parse_norm_spec(const std::string& text) {
  Cursor c{text};
  if (c.keyword("linf")) {
    c.end();
    return NormSpec::lp_inf();
  }
  if (c.keyword("l1")) {
    c.end();
    return NormSpec::lp(1.0);
  }
  if (c.keyword("l2")) {
    c.end();
    return NormSpec::lp(2.0);
  }
  if (c.keyword("lp")) {
    c.expect(':');
    const PValue p = p_value(c);
    c.end();
    return p.infinite ? NormSpec::lp_inf() : NormSpec::lp(p.value);
  }
  if (c.keyword("wlp")) {
    c.expect(':');
    const PValue p = p_value(c);
    c.expect(':');
    const std::size_t at = c.pos;
    std::vector<double> weights = number_list(c);
    c.end();
    try {
      return p.infinite ? NormSpec::weighted_lp_inf(std::move(weights))
                        : NormSpec::weighted_lp(p.value, std::move(weights));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), at);
    }
  }
  if (c.keyword("ip")) {
    c.expect(':');
    c.skip_ws();
    const std::size_t at = c.pos;
    c.expect('[');
    std::vector<std::vector<double>> rows;
    rows.push_back(number_list(c));
    while (c.eat(',')) rows.push_back(number_list(c));
    c.expect(']');
    c.end();
    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw ParseError("matrix rows must form a square", at);
      entries.insert(entries.end(), row.begin(), row.end());
    }
    try {
      return NormSpec::inner_product(SymMatrix(n, std::move(entries)));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), at);
    }
  }
  throw ParseError("unknown norm spec (expected l1 | l2 | linf | lp: | wlp: | ip:)", c.pos);
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string fmt_list(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += fmt_double(values[i]);
  }
  out += ']';
  return out;
}

}  // namespace

std::string format_norm_spec(const NormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::Lp:
      if (spec.p() == 1.0) return "l1";
      if (spec.p() == 2.0) return "l2";
      return "lp:" + fmt_double(spec.p());
    case NormKind::LpInf:
      return "linf";
    case NormKind::WeightedLp:
      return "wlp:" + fmt_double(spec.p()) + ":" + fmt_list(spec.weights());
    case NormKind::WeightedLpInf:
      return "wlp:inf:" + fmt_list(spec.weights());
    case NormKind::InnerProduct: {
      const SymMatrix& g = spec.matrix();
      std::string out = "ip:[";
      for (std::size_t i = 0; i < g.dim(); ++i) {
        if (i != 0) out += ',';
        out += '[';
        for (std::size_t j = 0; j < g.dim(); ++j) {
          if (j != 0) out += ',';
          out += fmt_double(g.at(i, j));
        }
        out += ']';
      }
      out += ']';
      return out;
    }
  }
  return {};
}

}  // namespace bangle
