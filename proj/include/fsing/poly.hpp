// Copyright 2026 The Authors.
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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"

namespace fsing {

/// Ordered, distinct variable names x_1, ..., x_n.
class Vars {
 public:
  explicit Vars(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
      throw Error(Errc::InvalidArgument, "variable list is empty");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) {
        throw Error(Errc::InvalidArgument,
                    "invalid variable name '" + names_[i] + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) {
          throw Error(Errc::NameCollision, "duplicate variable '" + names_[i] + "'");
        }
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  static bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) return false;
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    if (!alpha(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) {
      return alpha(c) || (c >= '0' && c <= '9');
    });
  }

  friend bool operator==(const Vars&, const Vars&) = default;

 private:
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const Vars>(std::move(names));
}

/// x1, ..., xn (or with another prefix).
inline VarsPtr numbered_vars(std::size_t n, std::string_view prefix = "x") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return make_vars(std::move(names));
}

using Exponent = std::uint16_t;
inline constexpr std::uint32_t kExponentLimit = 1u << 16;

/// Exponent vector. Ordered by graded lex with x_1 < x_2 < ... < x_n: total
/// degree first, then the exponent of the last variable, and so on.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error(Errc::IndexOutOfRange, "variable index");
    Monomial m(nvars);
    m.exps_[i] = 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_.at(i) = e; }
  std::span<const Exponent> exps() const noexcept { return exps_; }

  std::uint32_t degree() const noexcept {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.exps_.size(); i-- > 0;) {
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Exponent> exps_;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> exps(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t e = std::uint32_t{a[i]} + b[i];
    if (e >= kExponentLimit) {
      throw Error(Errc::ExponentOverflow, "monomial exponent exceeds 2^16 - 1");
    }
    exps[i] = static_cast<Exponent>(e);
  }
  return Monomial(std::move(exps));
}

/// a / b when b divides a.
inline std::optional<Monomial> monomial_quotient(const Monomial& a,
                                                 const Monomial& b) {
  if (!b.divides(a)) return std::nullopt;
  std::vector<Exponent> exps(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    exps[i] = static_cast<Exponent>(a[i] - b[i]);
  }
  return Monomial(std::move(exps));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exps()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

using Point = std::vector<Scalar>;

/// Sparse polynomial over F_{p^s}. Terms are kept sorted ascending in the
/// monomial order with no zero coefficients and no repeated monomials.
class Poly {
 public:
  Poly(Field field, VarsPtr vars) : field_(std::move(field)), vars_(std::move(vars)) {}

  static Poly from_terms(Field field, VarsPtr vars, std::vector<Term> terms) {
    Poly out(std::move(field), std::move(vars));
    const std::size_t n = out.nvars();
    for (const auto& t : terms) {
      if (t.mono.size() != n) {
        throw Error(Errc::ContextMismatch, "monomial length differs from variable count");
      }
      if (!out.field_.is_canonical(t.coeff)) {
        throw Error(Errc::FieldMismatch, "coefficient outside the field");
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
        out.terms_.back().coeff = out.field_.add(out.terms_.back().coeff, t.coeff);
      } else {
        out.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return out;
  }

  static Poly constant(Field field, VarsPtr vars, const Scalar& c) {
    const std::size_t n = vars->size();
    return monomial(std::move(field), std::move(vars), Monomial(n), c);
  }

  static Poly one(Field field, VarsPtr vars) {
    const Scalar c = field.one();
    return constant(std::move(field), std::move(vars), c);
  }

  static Poly variable(Field field, VarsPtr vars, std::size_t i) {
    const std::size_t n = vars->size();
    const Scalar c = field.one();
    return monomial(std::move(field), std::move(vars), Monomial::variable(n, i), c);
  }

  static Poly monomial(Field field, VarsPtr vars, Monomial m, const Scalar& c) {
    std::vector<Term> terms;
    terms.push_back({std::move(m), c});
    return from_terms(std::move(field), std::move(vars), std::move(terms));
  }

  const Field& field() const noexcept { return field_; }
  const VarsPtr& vars_ptr() const noexcept { return vars_; }
  const Vars& vars() const noexcept { return *vars_; }
  std::size_t nvars() const noexcept { return vars_->size(); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  std::uint32_t total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.back().mono.degree();
  }

  bool is_homogeneous() const noexcept {
    return terms_.empty() ||
           terms_.front().mono.degree() == terms_.back().mono.degree();
  }

  /// Greatest term in the monomial order.
  const Term& leading_term() const {
    if (terms_.empty()) throw Error(Errc::ZeroInput, "zero polynomial has no leading term");
    return terms_.back();
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return field_.zero();
  }

  Poly scaled(const Scalar& c) const {
    Poly out(field_, vars_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
    return out;
  }

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Poly monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(terms_.back().coeff));
  }

  bool same_context(const Poly& other) const noexcept {
    return field_ == other.field_ &&
           (vars_ == other.vars_ || *vars_ == *other.vars_);
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.same_context(b) && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  VarsPtr vars_;
  std::vector<Term> terms_;
};

inline void require_same_context(const Poly& a, const Poly& b) {
  if (!a.same_context(b)) {
    throw Error(Errc::ContextMismatch, "polynomials live in different rings");
  }
}

inline void require_point(const Poly& f, const Point& a) {
  if (a.size() != f.nvars()) {
    throw Error(Errc::ContextMismatch, "point has the wrong number of coordinates");
  }
  for (const auto& c : a) {
    if (!f.field().is_canonical(c)) {
      throw Error(Errc::ContextMismatch, "point coordinate outside the field");
    }
  }
}

inline Point origin(std::size_t n) { return Point(n); }

namespace detail {

/// Monomials having an exponent >= bound in a checked variable are dropped
/// while multiplying. `unchecked` (optional) marks variables that are exempt.
struct Truncation {
  std::uint32_t bound;
  const std::vector<bool>* unchecked = nullptr;

  bool checked(std::size_t i) const noexcept {
    return unchecked == nullptr || !(*unchecked)[i];
  }
};

inline Poly multiply(const Poly& f, const Poly& g, const Truncation* trunc) {
  require_same_context(f, g);
  const Field& field = f.field();
  const std::size_t n = f.nvars();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(f.size() * g.size(), 1u << 20));
  std::vector<Exponent> exps(n);
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      bool keep = true;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t e = std::uint32_t{a.mono[i]} + b.mono[i];
        if (trunc != nullptr && e >= trunc->bound && trunc->checked(i)) {
          keep = false;
          break;
        }
        if (e >= kExponentLimit) {
          throw Error(Errc::ExponentOverflow, "product exponent exceeds 2^16 - 1");
        }
        exps[i] = static_cast<Exponent>(e);
      }
      if (!keep) continue;
      const Scalar c = field.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(Monomial(exps), c);
      if (!inserted) it->second = field.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, c});
  }
  return Poly::from_terms(field, f.vars_ptr(), std::move(terms));
}

inline Poly pow(const Poly& f, std::uint64_t k, const Truncation* trunc) {
  Poly result = Poly::one(f.field(), f.vars_ptr());
  Poly base = f;
  while (k > 0) {
    if (k & 1) result = multiply(result, base, trunc);
    k >>= 1;
    if (k > 0) base = multiply(base, base, trunc);
  }
  return result;
}

}  // namespace detail

inline Poly operator+(const Poly& f, const Poly& g) {
  require_same_context(f, g);
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return Poly::from_terms(f.field(), f.vars_ptr(), std::move(terms));
}

inline Poly operator-(const Poly& f) { return f.scaled(f.field().neg(f.field().one())); }
inline Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
inline Poly operator*(const Poly& f, const Poly& g) { return detail::multiply(f, g, nullptr); }

inline Poly pow(const Poly& f, std::uint64_t k) { return detail::pow(f, k, nullptr); }

enum class PolyOp { Add, Mul };

inline Poly poly_arith(const Poly& f, const Poly& g, PolyOp op) {
  return op == PolyOp::Add ? f + g : f * g;
}

/// Variables dividing some support monomial, ascending.
inline std::vector<std::size_t> variables_of(const Poly& f) {
  std::vector<bool> seen(f.nvars(), false);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] > 0) seen[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

inline Poly partial_derivative(const Poly& f, std::size_t i) {
  if (i >= f.nvars()) throw Error(Errc::IndexOutOfRange, "derivative variable index");
  const Field& field = f.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const Exponent e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, static_cast<Exponent>(e - 1));
    terms.push_back({std::move(m), field.mul(t.coeff, field.from_int(e))});
  }
  return Poly::from_terms(field, f.vars_ptr(), std::move(terms));
}

inline Scalar evaluate(const Poly& f, const Point& a) {
  require_point(f, a);
  const Field& field = f.field();
  Scalar sum = field.zero();
  for (const auto& t : f.terms()) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < a.size() && !v.is_zero(); ++i) {
      const Exponent e = t.mono[i];
      if (e == 1) {
        v = field.mul(v, a[i]);
      } else if (e > 1) {
        v = field.mul(v, field.pow(a[i], e));
      }
    }
    sum = field.add(sum, v);
  }
  return sum;
}

/// Substitutes values for the variables that have one; the rest stay free.
inline Poly specialize(const Poly& f, const std::vector<std::optional<Scalar>>& values) {
  if (values.size() != f.nvars()) {
    throw Error(Errc::ContextMismatch, "specialization has the wrong length");
  }
  const Field& field = f.field();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Scalar c = t.coeff;
    Monomial m = t.mono;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i] || m[i] == 0) continue;
      c = field.mul(c, field.pow(*values[i], m[i]));
      m.set(i, 0);
    }
    if (!c.is_zero()) terms.push_back({std::move(m), c});
  }
  return Poly::from_terms(field, f.vars_ptr(), std::move(terms));
}

/// f(x_1 + a_1, ..., x_n + a_n).
inline Poly shift_point(const Poly& f, const Point& a) {
  require_point(f, a);
  const Field& field = f.field();
  const auto& vars = f.vars_ptr();
  std::map<std::pair<std::size_t, Exponent>, Poly> powers;
  auto power_of = [&](std::size_t i, Exponent e) -> const Poly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      Poly lin = Poly::variable(field, vars, i) + Poly::constant(field, vars, a[i]);
      it = powers.emplace(key, pow(lin, e)).first;
    }
    return it->second;
  };
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Poly piece = Poly::constant(field, vars, t.coeff);
    Monomial untouched(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const Exponent e = t.mono[i];
      if (e == 0) continue;
      if (a[i].is_zero()) {
        untouched.set(i, e);
      } else {
        piece = piece * power_of(i, e);
      }
    }
    for (const auto& pt : piece.terms()) {
      terms.push_back({pt.mono * untouched, pt.coeff});
    }
  }
  return Poly::from_terms(field, vars, std::move(terms));
}

/// Quotient q with f = g q, or nullopt. Long division by the leading term;
/// the answer is re-verified by multiplication.
inline std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  require_same_context(f, g);
  if (g.is_zero()) throw Error(Errc::ZeroDivisor, "division by the zero polynomial");
  const Field& field = f.field();
  const Term& lead = g.leading_term();
  const Scalar lead_inv = field.inv(lead.coeff);
  Poly rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    auto m = monomial_quotient(top.mono, lead.mono);
    if (!m) return std::nullopt;
    const Scalar c = field.mul(top.coeff, lead_inv);
    quotient.push_back({*m, c});
    rest = rest - g * Poly::monomial(field, f.vars_ptr(), *m, c);
  }
  Poly q = Poly::from_terms(field, f.vars_ptr(), std::move(quotient));
  if (!(g * q == f)) return std::nullopt;
  return q;
}

/// Homogenization with a new last variable `zname`.
inline Poly homogenize(const Poly& f, const std::string& zname) {
  if (f.vars().index_of(zname)) {
    throw Error(Errc::NameCollision, "variable '" + zname + "' already exists");
  }
  std::vector<std::string> names = f.vars().names();
  names.push_back(zname);
  auto vars = make_vars(std::move(names));
  const std::uint32_t d = f.total_degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> exps(t.mono.exps().begin(), t.mono.exps().end());
    exps.push_back(static_cast<Exponent>(d - t.mono.degree()));
    terms.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Poly::from_terms(f.field(), std::move(vars), std::move(terms));
}

/// Same polynomial viewed in a ring with extra trailing variables.
inline Poly extend_vars(const Poly& f, VarsPtr larger) {
  if (larger->size() < f.nvars()) {
    throw Error(Errc::ContextMismatch, "target ring has fewer variables");
  }
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (larger->name(i) != f.vars().name(i)) {
      throw Error(Errc::ContextMismatch, "variable names do not extend");
    }
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> exps(t.mono.exps().begin(), t.mono.exps().end());
    exps.resize(larger->size(), 0);
    terms.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Poly::from_terms(f.field(), std::move(larger), std::move(terms));
}

struct OrderInitial {
  std::uint32_t ord;
  Poly initial;
};

/// m-adic order at the origin and the lowest-degree homogeneous part.
inline OrderInitial order_and_initial(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "order of the zero polynomial");
  const std::uint32_t ord = f.terms().front().mono.degree();
  std::vector<Term> low;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != ord) break;
    low.push_back(t);
  }
  return {ord, Poly::from_terms(f.field(), f.vars_ptr(), std::move(low))};
}

/// Coefficients of a prime-field polynomial embedded into an extension of
/// the same characteristic.
inline Poly change_field(const Poly& f, const Field& target) {
  if (f.field() == target) return f;
  if (!f.field().is_prime_field() || f.field().p() != target.p()) {
    throw Error(Errc::FieldMismatch, "can only embed F_p into F_{p^s}");
  }
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Poly::from_terms(target, f.vars_ptr(), std::move(terms));
}

/// Inverse of change_field; nullopt when some coefficient leaves F_p.
inline std::optional<Poly> restrict_to_prime_field(const Poly& f, const Field& prime) {
  if (!prime.is_prime_field() || prime.p() != f.field().p()) {
    throw Error(Errc::FieldMismatch, "target must be the prime field");
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (!f.field().in_prime_subfield(t.coeff)) return std::nullopt;
    terms.push_back(t);
  }
  return Poly::from_terms(prime, f.vars_ptr(), std::move(terms));
}

inline Point change_field(const Point& a, const Field& source, const Field& target) {
  if (source == target) return a;
  if (!source.is_prime_field() || source.p() != target.p()) {
    throw Error(Errc::FieldMismatch, "can only embed F_p into F_{p^s}");
  }
  return a;
}

}  // namespace fsing
