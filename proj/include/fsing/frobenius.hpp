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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fsing/bracket.hpp"
#include "fsing/error.hpp"
#include "fsing/poly.hpp"
#include "fsing/structure.hpp"

namespace fsing {

using Rational = boost::rational<std::int64_t>;

/// A monomial of f^(q-1) outside m^[q]: evidence that S/Q is F-split at the
/// origin.
struct SplitWitness {
  unsigned e;
  std::uint32_t q;
  Monomial witness;

  SplitWitness(unsigned e_, std::uint32_t q_, Monomial w) : e(e_), q(q_), witness(std::move(w)) {
    if (in_bracket_power(witness, q)) {
      throw Error(Errc::InvalidArgument, "split witness lies in the bracket power");
    }
  }
};

inline std::optional<SplitWitness> fedder_fsplit(const Poly& f, unsigned e) {
  const std::uint32_t q = bracket_exponent(f.field().p(), e);
  const Poly reduced = frobenius_power_mod_bracket(f, e);
  if (reduced.is_zero()) return std::nullopt;
  return SplitWitness(e, q, reduced.terms().front().mono);
}

/// Fedder's criterion for the complete intersection Q, using
/// (Q^[q] : Q) = (f^(q-1)) + Q^[q] with f the product of the factors.
inline std::optional<SplitWitness> fedder_fsplit(const CIdeal& q, unsigned e) {
  return fedder_fsplit(q.product(), e);
}

namespace detail {

inline bool factor_is_variable(const Poly& factor, std::size_t var) {
  return factor.size() == 1 &&
         factor.terms().front().mono == Monomial::variable(factor.nvars(), var);
}

// Least monomial of g * f^(q-1) outside (x_i^q : i not inverted).
inline std::optional<Monomial> multiplied_witness(const Poly& f, const Monomial& g, unsigned e,
                                                  const std::vector<bool>* inverted) {
  const std::uint32_t q = bracket_exponent(f.field().p(), e);
  const Poly power = frobenius_power_mod_bracket(f, e, inverted);
  const Truncation trunc{q, inverted};
  const Poly product =
      multiply(Poly::monomial(f.field(), f.vars_ptr(), g, f.field().one()), power, &trunc);
  if (product.is_zero()) return std::nullopt;
  return product.terms().front().mono;
}

}  // namespace detail

/// Second condition of the Glassbrenner criterion for complete
/// intersections: g f^(p^e - 1) not in m^[p^e]. Returns the least surviving
/// monomial.
inline std::optional<Monomial> glassbrenner_condition(const CIdeal& q, const Monomial& g,
                                                      unsigned e) {
  if (g.size() != q.nvars()) throw Error(Errc::ContextMismatch, "multiplier length");
  const Poly gp = Poly::monomial(q.field(), q.vars_ptr(), g, q.field().one());
  for (const auto& factor : q.factors()) {
    if (exact_divide(gp, factor)) {
      throw Error(Errc::MultiplierInMinimalPrime,
                  "multiplier is divisible by a factor of the ideal");
    }
  }
  return detail::multiplied_witness(q.product(), g, e, nullptr);
}

struct CertificateStage {
  std::size_t inverted_var;
  unsigned e;
  Monomial multiplier;
  Monomial witness;
  friend bool operator==(const CertificateStage&, const CertificateStage&) = default;
};

struct BaseRecord {
  std::size_t factor;
  Monomial unit_monomial;
  friend bool operator==(const BaseRecord&, const BaseRecord&) = default;
};

/// Strong F-regularity at the origin, as a chain of Glassbrenner stages
/// (each inverts one more variable) ending in a regular complete
/// intersection.
struct RegCertificate {
  std::vector<CertificateStage> stages;
  std::vector<BaseRecord> base;
  /// Factors that became units after the inversions.
  std::vector<std::size_t> discharged;
  bool used_fallback = false;
  friend bool operator==(const RegCertificate& a, const RegCertificate& b) {
    return a.stages == b.stages && a.base == b.base && a.discharged == b.discharged;
  }
};

struct CertificateCheck {
  bool ok = true;
  /// Index of the failing stage; stages.size() refers to the base case.
  std::optional<std::size_t> failing_stage;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline std::uint32_t uninverted_degree(const Monomial& m, const std::vector<bool>& inverted) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!inverted[i]) d += m[i];
  }
  return d;
}

// A factor with a support monomial made only of inverted variables (or a
// nonzero constant term) is a unit in the localized ring.
inline bool is_unit_factor(const Poly& factor, const std::vector<bool>& inverted) {
  for (const auto& t : factor.terms()) {
    if (uninverted_degree(t.mono, inverted) == 0) return true;
  }
  return false;
}

inline std::vector<std::size_t> active_factors(const CIdeal& q, const std::vector<bool>& inverted) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_unit_factor(q.factor(i), inverted)) out.push_back(i);
  }
  return out;
}

inline Poly active_product(const CIdeal& q, const std::vector<std::size_t>& active) {
  Poly out = Poly::one(q.field(), q.vars_ptr());
  for (auto i : active) out = out * q.factor(i);
  return out;
}

inline std::optional<Monomial> unit_monomial(const Poly& factor, const std::vector<bool>& inverted) {
  for (const auto& t : factor.terms()) {
    if (uninverted_degree(t.mono, inverted) == 1) return t.mono;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> single_uninverted_var(const Monomial& m,
                                                        const std::vector<bool>& inverted) {
  if (uninverted_degree(m, inverted) != 1) return std::nullopt;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!inverted[i] && m[i] == 1) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Follows the induction of the strong F-regularity argument: while some
/// remaining factor has no monomial of degree one in the non-inverted
/// variables, invert the least-index variable of the first such factor
/// after exhibiting x_k f^(q-1) outside the localized bracket power.
inline RegCertificate build_regularity_certificate(const CIdeal& q, unsigned e_max = 3) {
  if (e_max == 0) throw Error(Errc::InvalidArgument, "e_max must be positive");
  const std::size_t n = q.nvars();
  std::vector<bool> inverted(n, false);
  RegCertificate cert;
  for (;;) {
    const auto active = detail::active_factors(q, inverted);
    std::optional<std::size_t> offending;
    for (auto i : active) {
      if (!detail::unit_monomial(q.factor(i), inverted)) {
        offending = i;
        break;
      }
    }
    if (!offending) {
      for (auto i : active) {
        cert.base.push_back({i, *detail::unit_monomial(q.factor(i), inverted)});
      }
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (std::find(active.begin(), active.end(), i) == active.end()) {
          cert.discharged.push_back(i);
        }
      }
      return cert;
    }

    const Poly f = detail::active_product(q, active);
    auto try_stage = [&](std::size_t var) -> std::optional<CertificateStage> {
      for (const auto& factor : q.factors()) {
        if (detail::factor_is_variable(factor, var)) return std::nullopt;
      }
      const Monomial multiplier = Monomial::variable(n, var);
      for (unsigned e = 1; e <= e_max; ++e) {
        if (auto w = detail::multiplied_witness(f, multiplier, e, &inverted)) {
          return CertificateStage{var, e, multiplier, *w};
        }
      }
      return std::nullopt;
    };

    std::optional<CertificateStage> stage;
    for (auto v : q.varsets()[*offending]) {
      if (!inverted[v]) {
        stage = try_stage(v);
        break;
      }
    }
    if (!stage) {
      cert.used_fallback = true;
      for (auto i : active) {
        for (auto v : q.varsets()[i]) {
          if (inverted[v]) continue;
          if (auto s = try_stage(v); s && (!stage || s->inverted_var < stage->inverted_var)) {
            stage = s;
          }
        }
      }
    }
    if (!stage) {
      throw Error(Errc::CertificateSearchExhausted,
                  "no stage witness with e <= " + std::to_string(e_max));
    }
    inverted[stage->inverted_var] = true;
    cert.stages.push_back(std::move(*stage));
  }
}

/// Replays every stage condition and the base case from scratch.
inline CertificateCheck verify_regularity_certificate(const CIdeal& q, const RegCertificate& cert) {
  const std::size_t n = q.nvars();
  std::vector<bool> inverted(n, false);
  auto fail = [](std::size_t stage, std::string reason) {
    return CertificateCheck{false, stage, std::move(reason)};
  };
  for (std::size_t k = 0; k < cert.stages.size(); ++k) {
    const auto& stage = cert.stages[k];
    if (stage.inverted_var >= n || inverted[stage.inverted_var]) {
      return fail(k, "inverted variable out of range or already inverted");
    }
    if (stage.multiplier.size() != n || stage.witness.size() != n) {
      return fail(k, "monomial has the wrong length");
    }
    if (!(stage.multiplier == Monomial::variable(n, stage.inverted_var))) {
      return fail(k, "multiplier is not the inverted variable");
    }
    for (const auto& factor : q.factors()) {
      if (detail::factor_is_variable(factor, stage.inverted_var)) {
        return fail(k, "multiplier lies in a minimal prime");
      }
    }
    std::uint32_t bound = 0;
    try {
      bound = bracket_exponent(q.field().p(), stage.e);
    } catch (const Error&) {
      return fail(k, "stage exponent out of range");
    }
    if (in_bracket_power(stage.witness, bound, &inverted)) {
      return fail(k, "witness exponent exceeds q - 1");
    }
    const Poly f = detail::active_product(q, detail::active_factors(q, inverted));
    const Poly power = frobenius_power_mod_bracket(f, stage.e, &inverted);
    const detail::Truncation trunc{bound, &inverted};
    const Poly product = detail::multiply(
        Poly::monomial(q.field(), q.vars_ptr(), stage.multiplier, q.field().one()), power, &trunc);
    if (product.coefficient(stage.witness).is_zero()) {
      return fail(k, "witness does not appear in multiplier * f^(q-1)");
    }
    inverted[stage.inverted_var] = true;
  }

  const std::size_t base_index = cert.stages.size();
  const auto active = detail::active_factors(q, inverted);
  if (cert.base.size() != active.size()) {
    return fail(base_index, "base case must cover exactly the non-unit factors");
  }
  std::vector<bool> used_var(n, false);
  std::vector<bool> covered(q.size(), false);
  for (const auto& record : cert.base) {
    if (record.factor >= q.size() || covered[record.factor] ||
        detail::is_unit_factor(q.factor(record.factor), inverted)) {
      return fail(base_index, "base record references an invalid factor");
    }
    covered[record.factor] = true;
    if (record.unit_monomial.size() != n ||
        q.factor(record.factor).coefficient(record.unit_monomial).is_zero()) {
      return fail(base_index, "unit monomial is not in the factor support");
    }
    auto var = detail::single_uninverted_var(record.unit_monomial, inverted);
    if (!var || used_var[*var]) {
      return fail(base_index, "unit monomial must have one distinct non-inverted variable");
    }
    used_var[*var] = true;
  }
  return {};
}

/// b(q) = max slack sum_i (q - 1 - w_i) over monomials w of
/// f^(q-1) mod m^[q], and lambda = b / (q - 1). Monomial multipliers suffice
/// because bracket-power membership is decided term by term.
struct FptSample {
  unsigned e;
  std::uint32_t q;
  std::optional<std::uint64_t> b;  // empty when not F-split at this e
  std::optional<Rational> lambda;
};

inline FptSample fpt_oracle(const Poly& f, unsigned e) {
  const std::uint32_t q = bracket_exponent(f.field().p(), e);
  const Poly reduced = frobenius_power_mod_bracket(f, e);
  FptSample sample{e, q, std::nullopt, std::nullopt};
  if (reduced.is_zero()) return sample;
  const std::uint64_t n = f.nvars();
  const std::uint64_t least_degree = reduced.terms().front().mono.degree();
  const std::uint64_t b = n * (q - 1) - least_degree;
  sample.b = b;
  sample.lambda = Rational(static_cast<std::int64_t>(b), static_cast<std::int64_t>(q - 1));
  return sample;
}

inline FptSample fpt_oracle(const CIdeal& q, unsigned e) { return fpt_oracle(q.product(), e); }

}  // namespace fsing
