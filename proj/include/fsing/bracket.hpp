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
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"
#include "fsing/poly.hpp"

namespace fsing {

/// q = p^e, rejected when exponents up to q - 1 would not fit a Monomial.
inline std::uint32_t bracket_exponent(std::uint32_t p, unsigned e) {
  if (e == 0) throw Error(Errc::InvalidArgument, "Frobenius exponent must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kExponentLimit) {
      throw Error(Errc::ExponentOverflow,
                  "p^e exceeds 2^16 (p = " + std::to_string(p) +
                      ", e = " + std::to_string(e) + ")");
    }
  }
  return static_cast<std::uint32_t>(q);
}

/// Membership of a monomial in (x_i^q : i checked). Variables flagged in
/// `inverted` are units and never contribute.
inline bool in_bracket_power(const Monomial& m, std::uint32_t q,
                             const std::vector<bool>* inverted = nullptr) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (inverted != nullptr && (*inverted)[i]) continue;
    if (m[i] >= q) return true;
  }
  return false;
}

inline Poly reduce_mod_bracket(const Poly& f, std::uint32_t q,
                               const std::vector<bool>* inverted = nullptr) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (!in_bracket_power(t.mono, q, inverted)) kept.push_back(t);
  }
  return Poly::from_terms(f.field(), f.vars_ptr(), std::move(kept));
}

namespace detail {

// g^(p^i) = g^[p^i] with coefficients raised by Frobenius, truncated.
inline Poly frobenius_twist(const Poly& g, unsigned i, const Truncation& trunc) {
  const Field& field = g.field();
  std::uint64_t scale = 1;
  for (unsigned k = 0; k < i; ++k) scale *= field.p();
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    std::vector<Exponent> exps(t.mono.size());
    bool keep = true;
    for (std::size_t v = 0; v < exps.size() && keep; ++v) {
      const std::uint64_t e = scale * t.mono[v];
      if (e >= trunc.bound && trunc.checked(v)) {
        keep = false;
      } else if (e >= kExponentLimit) {
        throw Error(Errc::ExponentOverflow, "Frobenius twist exponent exceeds 2^16 - 1");
      } else {
        exps[v] = static_cast<Exponent>(e);
      }
    }
    if (!keep) continue;
    Scalar c = t.coeff;
    for (unsigned k = 0; k < i; ++k) c = field.frobenius(c);
    terms.push_back({Monomial(std::move(exps)), c});
  }
  return Poly::from_terms(field, g.vars_ptr(), std::move(terms));
}

}  // namespace detail

/// Image of f^(p^e - 1) in S / (x_i^(p^e)), computed as the product of the
/// twists (f^(p-1))^[p^i] for i < e. Truncating every intermediate product
/// is exact: exponents never decrease under multiplication, so a monomial
/// in the bracket power cannot leave it again.
///
/// With `inverted`, the listed variables are treated as units: their
/// exponents are not bounded (localization at the remaining variables).
inline Poly frobenius_power_mod_bracket(const Poly& f, unsigned e,
                                        const std::vector<bool>* inverted = nullptr) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "Frobenius power of zero");
  if (inverted != nullptr && inverted->size() != f.nvars()) {
    throw Error(Errc::ContextMismatch, "inverted-variable mask has the wrong length");
  }
  const std::uint32_t p = f.field().p();
  const std::uint32_t q = bracket_exponent(p, e);
  const detail::Truncation trunc{q, inverted};
  const Poly base = detail::pow(reduce_mod_bracket(f, q, inverted), p - 1, &trunc);
  Poly result = base;
  for (unsigned i = 1; i < e && !result.is_zero(); ++i) {
    result = detail::multiply(result, detail::frobenius_twist(base, i, trunc), &trunc);
  }
  return result;
}

}  // namespace fsing
