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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"
#include "fsing/frobenius.hpp"
#include "fsing/poly.hpp"
#include "fsing/structure.hpp"

namespace fsing {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

struct InvariantReport {
  Point point;
  /// Extension degree of the field the point's coordinates live in.
  int point_degree = 1;
  std::uint32_t ord = 0;
  std::uint32_t mult = 0;
  std::int64_t dim = 0;
  std::int64_t dfpt = 0;
  Rational fpt;
  std::size_t t = 0;
  std::vector<std::uint32_t> factor_orders;
};

/// e((S/(f))_m) at m = the point a, read off as the order of f at a.
inline std::uint32_t multiplicity_hypersurface(const Poly& f, const Point& a) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "multiplicity of the zero polynomial");
  if (!evaluate(f, a).is_zero()) {
    throw Error(Errc::PointNotOnHypersurface, "f does not vanish at the point");
  }
  return order_and_initial(shift_point(f, a)).ord;
}

/// dfpt = e(S/(f)) - t at a point of V(Q), where e is additive over the
/// variable-disjoint factors; fpt = dim - dfpt = n - e.
inline InvariantReport dfpt_at(const CIdeal& q, const Point& a) {
  for (const auto& factor : q.factors()) {
    if (!is_squarefree_supported(factor)) {
      throw Error(Errc::NotSquareFreeSupported, "dfpt formula needs square-free supported factors");
    }
    require_point(factor, a);
    if (!evaluate(factor, a).is_zero()) {
      throw Error(Errc::PointNotOnVariety, "a factor does not vanish at the point");
    }
  }
  InvariantReport r;
  r.point = a;
  r.point_degree = q.field().s();
  r.t = q.size();
  for (const auto& factor : q.factors()) {
    const std::uint32_t ord = order_and_initial(shift_point(factor, a)).ord;
    r.factor_orders.push_back(ord);
    r.mult += ord;
  }
  r.ord = r.mult;
  const auto n = static_cast<std::int64_t>(q.nvars());
  const auto t = static_cast<std::int64_t>(r.t);
  r.dim = n - t;
  r.dfpt = static_cast<std::int64_t>(r.mult) - t;
  r.fpt = Rational(r.dim - r.dfpt);
  return r;
}

/// Visits the points of F_{p^s}^n for s = 1..s_max (only the base field
/// when it is not prime), skipping points already seen over F_p. Fields
/// whose point count exceeds the budget are skipped. Returns true when a
/// field was skipped for budget reasons. The visitor returns false to stop.
inline bool search_points(const Field& base, std::size_t n, int s_max, std::uint64_t budget,
                          const std::function<bool(const Field&, const Point&)>& visit) {
  if (s_max < 1) throw Error(Errc::InvalidArgument, "s_max must be positive");
  bool over_budget = false;
  const int first = base.is_prime_field() ? 1 : base.s();
  const int last = base.is_prime_field() ? std::min(s_max, kMaxExtensionDegree) : base.s();
  for (int s = first; s <= last; ++s) {
    const Field field = s == base.s() ? base : Field::build(base.p(), s);
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) {
      if (total > budget / field.order()) fits = false;
      total *= field.order();
    }
    if (!fits || total > budget) {
      over_budget = true;
      continue;
    }
    Point pt(n);
    std::vector<std::uint64_t> digits(n, 0);
    for (std::uint64_t index = 0; index < total; ++index) {
      if (index > 0) {
        for (std::size_t i = n; i-- > 0;) {
          if (++digits[i] < field.order()) {
            pt[i] = field.element(digits[i]);
            break;
          }
          digits[i] = 0;
          pt[i] = field.zero();
        }
      }
      if (s > 1 && base.is_prime_field()) {
        bool all_prime = true;
        for (const auto& c : pt) all_prime = all_prime && field.in_prime_subfield(c);
        if (all_prime) continue;
      }
      if (!visit(field, pt)) return over_budget;
    }
  }
  return over_budget;
}

struct GlobalInvariants {
  InvariantReport report;
  /// True when every factor is homogeneous, so the origin attains the max.
  bool exact = false;
  bool budget_exceeded = false;
  std::uint64_t points_on_variety = 0;
};

inline CIdeal change_field(const CIdeal& q, const Field& target) {
  std::vector<Poly> lifted;
  for (const auto& f : q.factors()) lifted.push_back(change_field(f, target));
  return CIdeal(std::move(lifted), q.unit());
}

/// Max of e(S/(f)) - t over the searched points of V(Q); the first
/// maximizer in search order is reported.
inline GlobalInvariants global_invariants(const CIdeal& q, int s_max = 3,
                                          std::uint64_t budget = kDefaultPointBudget) {
  GlobalInvariants out;
  std::optional<InvariantReport> best;
  out.exact = true;
  for (const auto& f : q.factors()) out.exact = out.exact && f.is_homogeneous();

  std::optional<CIdeal> lifted;
  out.budget_exceeded = search_points(q.field(), q.nvars(), s_max, budget,
                                      [&](const Field& field, const Point& pt) {
    if (!lifted || !(lifted->field() == field)) lifted = change_field(q, field);
    for (const auto& f : lifted->factors()) {
      if (!evaluate(f, pt).is_zero()) return true;
    }
    ++out.points_on_variety;
    InvariantReport r = dfpt_at(*lifted, pt);
    if (!best || r.mult > best->mult) best = std::move(r);
    return true;
  });
  if (!best) {
    throw Error(Errc::PointNotOnVariety, "no point of V(Q) within the search budget");
  }
  out.report = std::move(*best);
  return out;
}

struct CrosscheckEntry {
  FptSample sample;
  /// (n - e(S/(f))) - lambda(e); empty when the sample is not F-split.
  std::optional<Rational> discrepancy;
};

inline std::vector<CrosscheckEntry> fpt_crosscheck(const CIdeal& q, std::span<const unsigned> e_list) {
  const InvariantReport r = dfpt_at(q, origin(q.nvars()));
  const Poly f = q.product();
  std::vector<CrosscheckEntry> out;
  for (unsigned e : e_list) {
    CrosscheckEntry entry{fpt_oracle(f, e), std::nullopt};
    if (entry.sample.lambda) entry.discrepancy = r.fpt - *entry.sample.lambda;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace fsing
