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
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"
#include "fsing/poly.hpp"

namespace fsing {

struct SquarefreeCheck {
  bool ok = true;
  /// Least offending support monomial when !ok.
  std::optional<Monomial> offending;
  explicit operator bool() const noexcept { return ok; }
};

inline SquarefreeCheck is_squarefree_supported(const Poly& f) {
  for (const auto& t : f.terms()) {
    if (!t.mono.is_squarefree()) return {false, t.mono};
  }
  return {};
}

struct Support {
  std::vector<Monomial> supp;
  std::vector<std::size_t> vars;
};

inline Support support_vars(const Poly& f) {
  Support out;
  for (const auto& t : f.terms()) out.supp.push_back(t.mono);
  out.vars = variables_of(f);
  return out;
}

/// The ideal (f_1, ..., f_t) of pairwise variable-disjoint factors. The
/// factorization routine is the only producer of certified instances
/// (square-free supported, irreducible); the plain constructor only checks
/// the structural invariants, so it can also hold test inputs like (x^2).
class CIdeal {
 public:
  explicit CIdeal(std::vector<Poly> factors, std::optional<Scalar> unit = std::nullopt)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::InvalidArgument, "ideal needs at least one factor");
    for (const auto& f : factors_) {
      require_same_context(factors_.front(), f);
      if (f.is_constant()) {
        throw Error(Errc::ZeroOrConstant, "factors must be non-constant");
      }
      varsets_.push_back(variables_of(f));
    }
    for (std::size_t i = 0; i < varsets_.size(); ++i) {
      for (std::size_t j = i + 1; j < varsets_.size(); ++j) {
        std::vector<std::size_t> common;
        std::set_intersection(varsets_[i].begin(), varsets_[i].end(),
                              varsets_[j].begin(), varsets_[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          throw Error(Errc::InvalidArgument, "factors share a variable");
        }
      }
    }
    unit_ = unit.value_or(factors_.front().field().one());
  }

  const std::vector<Poly>& factors() const noexcept { return factors_; }
  const Poly& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<std::vector<std::size_t>>& varsets() const noexcept { return varsets_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const Field& field() const noexcept { return factors_.front().field(); }
  const VarsPtr& vars_ptr() const noexcept { return factors_.front().vars_ptr(); }
  std::size_t nvars() const noexcept { return factors_.front().nvars(); }
  /// c with f = c * f_1 ... f_t for the factored input.
  const Scalar& unit() const noexcept { return unit_; }
  bool certified() const noexcept { return certified_; }

  Poly product() const {
    Poly out = factors_.front();
    for (std::size_t i = 1; i < factors_.size(); ++i) out = out * factors_[i];
    return out;
  }

 private:
  friend CIdeal make_certified_ideal(std::vector<Poly>, Scalar);

  std::vector<Poly> factors_;
  std::vector<std::vector<std::size_t>> varsets_;
  Scalar unit_;
  bool certified_ = false;
};

inline CIdeal make_certified_ideal(std::vector<Poly> factors, Scalar unit) {
  CIdeal q(std::move(factors), unit);
  q.certified_ = true;
  return q;
}

enum class FactorPath { Coupling, Exhaustive };

struct FactorizationTrace {
  FactorPath path = FactorPath::Coupling;
  /// Candidate variable blocks from the coupling test (even if rejected).
  std::vector<std::vector<std::size_t>> coupling_blocks;
};

inline constexpr std::size_t kExhaustiveVarLimit = 20;

namespace detail {

inline void validate_factorizable(const Poly& f) {
  if (f.is_constant()) throw Error(Errc::ZeroOrConstant, "cannot factor a constant");
  if (auto sq = is_squarefree_supported(f); !sq) {
    throw Error(Errc::NotSquareFreeSupported, "input has a support monomial with a square");
  }
}

inline bool coupled(const Poly& f, std::size_t i, std::size_t j) {
  const Poly di = partial_derivative(f, i);
  const Poly dj = partial_derivative(f, j);
  const Poly dij = partial_derivative(di, j);
  return !(f * dij == di * dj);
}

/// Blocks of the transitive closure of the coupling relation on vars(f).
inline std::vector<std::vector<std::size_t>> coupling_blocks(const Poly& f) {
  const auto vars = variables_of(f);
  std::vector<std::size_t> parent(vars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      if (find(a) == find(b)) continue;
      if (coupled(f, vars[a], vars[b])) parent[find(b)] = find(a);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < vars.size(); ++a) groups[find(a)].push_back(vars[a]);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [root, block] : groups) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// Sets the variables outside `block` to random values until the result is
// nonzero. Tries F_p first, then F_{p^2} and F_{p^3} when f is over a prime
// field; the monic result is brought back to the base field.
inline std::optional<Poly> specialize_outside(const Poly& f, const std::vector<std::size_t>& block,
                                              std::mt19937_64& rng) {
  constexpr int kTrials = 64;
  std::vector<bool> in_block(f.nvars(), false);
  for (auto v : block) in_block[v] = true;
  const auto fvars = variables_of(f);

  const int max_degree = f.field().is_prime_field() ? 3 : 1;
  for (int degree = 1; degree <= max_degree; ++degree) {
    const Field field = degree == 1 ? f.field() : Field::build(f.field().p(), degree);
    const Poly g = change_field(f, field);
    for (int trial = 0; trial < kTrials; ++trial) {
      std::vector<std::optional<Scalar>> values(f.nvars());
      for (auto v : fvars) {
        if (!in_block[v]) values[v] = field.element(rng() % field.order());
      }
      Poly candidate = specialize(g, values);
      if (candidate.is_zero()) continue;
      candidate = candidate.monic();
      if (field == f.field()) return candidate;
      auto back = restrict_to_prime_field(candidate, f.field());
      if (!back) return std::nullopt;
      return back;
    }
  }
  return std::nullopt;
}

/// Heuristic path: coupling blocks, specialization, division check. Returns
/// monic factors ordered by their least variable, or nullopt when any
/// verification step fails.
inline std::optional<std::vector<Poly>> factor_by_coupling(
    const Poly& f, std::uint64_t seed, std::vector<std::vector<std::size_t>>* blocks_out) {
  auto blocks = coupling_blocks(f);
  if (blocks_out != nullptr) *blocks_out = blocks;
  std::mt19937_64 rng(seed);
  std::vector<Poly> factors;
  Poly rest = f;
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    auto candidate = specialize_outside(rest, blocks[b], rng);
    if (!candidate || variables_of(*candidate) != blocks[b]) return std::nullopt;
    auto cofactor = exact_divide(rest, *candidate);
    if (!cofactor) return std::nullopt;
    factors.push_back(std::move(*candidate));
    rest = std::move(*cofactor);
  }
  if (variables_of(rest) != blocks.back()) return std::nullopt;
  factors.push_back(rest.monic());
  return factors;
}

// If f = F_A(x_A) F_B(x_B) then the coefficient matrix indexed by
// (A-part, B-part) of each support monomial has rank one.
inline std::optional<std::pair<Poly, Poly>> split_along(const Poly& f,
                                                        const std::vector<bool>& in_a) {
  const Field& field = f.field();
  const std::size_t n = f.nvars();
  auto part = [&](const Monomial& m, bool a_side) {
    Monomial out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (in_a[i] == a_side) out.set(i, m[i]);
    }
    return out;
  };
  std::map<Monomial, std::size_t> rows;
  std::map<Monomial, std::size_t> cols;
  for (const auto& t : f.terms()) {
    rows.try_emplace(part(t.mono, true), rows.size());
    cols.try_emplace(part(t.mono, false), cols.size());
  }
  if (rows.size() * cols.size() != f.size()) return std::nullopt;
  const Term& pivot = f.terms().front();
  const Monomial u0 = part(pivot.mono, true);
  const Monomial v0 = part(pivot.mono, false);
  for (const auto& t : f.terms()) {
    const Monomial u = part(t.mono, true);
    const Monomial v = part(t.mono, false);
    const Scalar lhs = field.mul(t.coeff, pivot.coeff);
    const Scalar rhs = field.mul(f.coefficient(u * v0), f.coefficient(u0 * v));
    if (!(lhs == rhs)) return std::nullopt;
  }
  std::vector<Term> a_terms;
  std::vector<Term> b_terms;
  for (const auto& [u, idx] : rows) a_terms.push_back({u, f.coefficient(u * v0)});
  for (const auto& [v, idx] : cols) b_terms.push_back({v, f.coefficient(u0 * v)});
  Poly fa = Poly::from_terms(field, f.vars_ptr(), std::move(a_terms));
  Poly fb = Poly::from_terms(field, f.vars_ptr(), std::move(b_terms)).scaled(field.inv(pivot.coeff));
  return std::make_pair(std::move(fa), std::move(fb));
}

inline void factor_exhaustive_into(const Poly& f, std::vector<Poly>& out) {
  const auto vars = variables_of(f);
  if (vars.size() > kExhaustiveVarLimit) {
    throw Error(Errc::BudgetExceeded, "exhaustive bipartition search limited to 20 variables");
  }
  if (vars.size() >= 2) {
    const std::uint64_t count = std::uint64_t{1} << (vars.size() - 1);
    // Subsets A always contain vars[0]; mask enumerates the rest.
    for (std::uint64_t mask = 0; mask + 1 < count; ++mask) {
      std::vector<bool> in_a(f.nvars(), false);
      in_a[vars[0]] = true;
      for (std::size_t k = 1; k < vars.size(); ++k) {
        if (mask >> (k - 1) & 1) in_a[vars[k]] = true;
      }
      if (auto split = split_along(f, in_a)) {
        factor_exhaustive_into(split->first, out);
        factor_exhaustive_into(split->second, out);
        return;
      }
    }
  }
  out.push_back(f.monic());
}

inline std::vector<Poly> factor_exhaustive(const Poly& f) {
  std::vector<Poly> out;
  factor_exhaustive_into(f, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return variables_of(a).front() < variables_of(b).front();
  });
  return out;
}

}  // namespace detail

/// Irreducible factorization f = c f_1 ... f_t of a square-free supported
/// polynomial. The factors are monic, square-free supported and pairwise
/// variable-disjoint; they are ordered by their least variable.
inline CIdeal disjoint_factorization(const Poly& f, FactorizationTrace* trace = nullptr,
                                     std::uint64_t seed = 0) {
  detail::validate_factorizable(f);
  FactorizationTrace local;
  FactorizationTrace& tr = trace != nullptr ? *trace : local;
  auto factors = detail::factor_by_coupling(f, seed, &tr.coupling_blocks);
  tr.path = FactorPath::Coupling;
  if (!factors) {
    tr.path = FactorPath::Exhaustive;
    factors = detail::factor_exhaustive(f);
  }
  const Scalar unit = f.leading_term().coeff;
  Poly check = Poly::constant(f.field(), f.vars_ptr(), unit);
  for (const auto& g : *factors) {
    if (!is_squarefree_supported(g)) {
      throw Error(Errc::NotSquareFreeSupported, "internal: factor lost square-free support");
    }
    check = check * g;
  }
  if (!(check == f)) {
    throw Error(Errc::InvalidArgument, "internal: factorization does not re-expand to input");
  }
  return make_certified_ideal(std::move(*factors), unit);
}

inline bool is_irreducible_sqfree(const Poly& f) {
  return disjoint_factorization(f).size() == 1;
}

/// gcd of two square-free supported polynomials as the monic product of
/// their common irreducible factors; 1 when coprime.
inline Poly gcd_sqfree(const Poly& f, const Poly& g) {
  require_same_context(f, g);
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroInput, "gcd of zero");
  for (const Poly* h : {&f, &g}) {
    if (!is_squarefree_supported(*h)) {
      throw Error(Errc::NotSquareFreeSupported, "gcd input is not square-free supported");
    }
  }
  Poly result = Poly::one(f.field(), f.vars_ptr());
  if (f.is_constant() || g.is_constant()) return result;
  const CIdeal qf = disjoint_factorization(f);
  const CIdeal qg = disjoint_factorization(g);
  for (const auto& a : qf.factors()) {
    for (const auto& b : qg.factors()) {
      if (a == b) result = result * a;
    }
  }
  return result;
}

/// Whether g x + h (x a variable absent from g and h) is irreducible, via
/// gcd(g, h) = 1. Pass `x` to have the absence checked.
inline bool degree_one_irreducibility(const Poly& g, const Poly& h,
                                      std::optional<std::size_t> x = std::nullopt) {
  require_same_context(g, h);
  if (g.is_zero()) throw Error(Errc::ZeroLeading, "leading coefficient g is zero");
  for (const Poly* p : {&g, &h}) {
    if (!is_squarefree_supported(*p)) {
      throw Error(Errc::NotSquareFreeSupported, "g and h must be square-free supported");
    }
    if (x) {
      if (*x >= g.nvars()) throw Error(Errc::IndexOutOfRange, "distinguished variable");
      for (const auto& t : p->terms()) {
        if (t.mono[*x] != 0) {
          throw Error(Errc::InvalidArgument, "g and h must not involve the distinguished variable");
        }
      }
    }
  }
  if (h.is_zero()) return g.is_constant();
  return gcd_sqfree(g, h).is_constant();
}

/// Factor counts over F_p and over F_{p^s} agree.
inline bool extension_stability_check(const Poly& f, int s) {
  if (!f.field().is_prime_field()) {
    throw Error(Errc::FieldMismatch, "extension check needs a prime base field");
  }
  const Field ext = Field::build(f.field().p(), s);
  const std::size_t base = disjoint_factorization(f).size();
  const std::size_t lifted = disjoint_factorization(change_field(f, ext)).size();
  return base == lifted;
}

}  // namespace fsing
