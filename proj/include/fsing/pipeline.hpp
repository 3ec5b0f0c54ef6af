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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"
#include "fsing/frobenius.hpp"
#include "fsing/invariants.hpp"
#include "fsing/io.hpp"
#include "fsing/poly.hpp"
#include "fsing/report.hpp"
#include "fsing/structure.hpp"

namespace fsing {

// ---------------------------------------------------------------------------
// Matroids

/// Sum over the bases B of prod_{i in B} x_i, in variables x1..xn.
inline Poly matroid_basis_polynomial(const MatroidInput& m, const Field& field) {
  if (m.bases.empty()) throw Error(Errc::EmptyBases, "matroid has no bases");
  if (m.n == 0) throw Error(Errc::InvalidMatroid, "empty ground set");
  const std::size_t rank = m.bases.front().size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<Term> terms;
  for (const auto& basis : m.bases) {
    if (basis.size() != rank) {
      throw Error(Errc::InvalidMatroid, "bases have different cardinalities");
    }
    std::vector<std::size_t> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::InvalidMatroid, "basis repeats an element");
    }
    Monomial mono(m.n);
    for (auto i : sorted) {
      if (i < 1 || i > m.n) {
        throw Error(Errc::IndexOutOfRange, "basis element " + std::to_string(i) + " outside 1.." +
                                               std::to_string(m.n));
      }
      mono.set(i - 1, 1);
    }
    if (seen.insert(sorted).second) terms.push_back({std::move(mono), field.one()});
  }
  return Poly::from_terms(field, numbered_vars(m.n), std::move(terms));
}

/// Basis exchange: for bases A != B and a in A \ B there is b in B \ A with
/// (A - a) + b a basis. Quadratic in the number of bases.
inline bool verify_exchange_axiom(const MatroidInput& m) {
  std::set<std::vector<std::size_t>> bases;
  for (auto b : m.bases) {
    std::sort(b.begin(), b.end());
    bases.insert(std::move(b));
  }
  for (const auto& a : bases) {
    for (const auto& b : bases) {
      if (a == b) continue;
      for (auto x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) continue;
        bool found = false;
        for (auto y : b) {
          if (std::binary_search(a.begin(), a.end(), y)) continue;
          std::vector<std::size_t> swapped;
          for (auto z : a) {
            if (z != x) swapped.push_back(z);
          }
          swapped.push_back(y);
          std::sort(swapped.begin(), swapped.end());
          if (bases.count(swapped) != 0) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// The g*l + h modification

/// `base` if unused in vars, else the first free base0, base1, ...
inline std::string fresh_name(const Vars& vars, const std::string& base) {
  if (!vars.index_of(base)) return base;
  for (std::size_t i = 0;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!vars.index_of(candidate)) return candidate;
  }
}

struct Modification {
  Poly g;
  Poly h;
  Point a;
  /// 1 + sum a_i x_i.
  Poly ell;
  /// g*ell + h.
  Poly f;
  /// f homogenized with the new variable `hom_var`.
  Poly ftilde;
  /// g*y + h where y = hom_var + sum a_i x_i is the new last coordinate.
  Poly transformed;
  std::string hom_var;
  std::string new_coord;
  RegCertificate certificate;
  CertificateCheck certificate_check;
  /// dfpt of S/(f) at the origin, as ord_0(f) - 1.
  std::uint32_t mult_origin = 0;
  std::int64_t dfpt_origin = 0;
};

namespace detail {

[[noreturn]] inline void hypothesis(const std::string& what) {
  throw Error(Errc::HypothesisViolated, what);
}

inline Poly linear_form(const Field& field, const VarsPtr& vars, const Point& a,
                        std::optional<std::size_t> leading_var) {
  std::vector<Term> terms;
  if (leading_var) {
    terms.push_back({Monomial::variable(vars->size(), *leading_var), field.one()});
  } else {
    terms.push_back({Monomial(vars->size()), field.one()});
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) terms.push_back({Monomial::variable(vars->size(), i), a[i]});
  }
  return Poly::from_terms(field, vars, std::move(terms));
}

}  // namespace detail

/// Builds f = g*l + h with l = 1 + sum a_i x_i, its homogenization, and the
/// presentation g*y + h in coordinates (x, y) where y is the homogenized l.
/// The latter is certified strongly F-regular.
inline Modification modification_build(const Poly& g, const Poly& h, const Point& a,
                                       unsigned e_max = 3) {
  require_same_context(g, h);
  require_point(g, a);
  if (h.is_zero()) detail::hypothesis("h must be nonzero");
  if (g.is_zero() || g.is_constant()) detail::hypothesis("g must be non-constant");
  if (!is_squarefree_supported(g)) detail::hypothesis("g is not square-free supported");
  if (!is_squarefree_supported(h)) detail::hypothesis("h is not square-free supported");
  if (!g.is_homogeneous()) detail::hypothesis("g is not homogeneous");
  if (!h.is_homogeneous()) detail::hypothesis("h is not homogeneous");
  if (h.total_degree() != g.total_degree() + 1) detail::hypothesis("deg h must equal deg g + 1");
  if (!is_irreducible_sqfree(g)) detail::hypothesis("g is not irreducible");
  if (exact_divide(h, g)) detail::hypothesis("g divides h");
  for (const auto& c : a) {
    if (!g.field().in_prime_subfield(c)) detail::hypothesis("point must have prime-field coordinates");
  }

  const Field& field = g.field();
  Modification m{g, h, a, detail::linear_form(field, g.vars_ptr(), a, std::nullopt),
                 g, g, g, "", "", {}, {}, 0, 0};
  m.f = g * m.ell + h;

  m.hom_var = fresh_name(g.vars(), "z");
  m.ftilde = homogenize(m.f, m.hom_var);
  const VarsPtr zvars = m.ftilde.vars_ptr();
  const Poly ell_tilde = detail::linear_form(field, zvars, a, g.nvars());
  if (!(m.ftilde == extend_vars(g, zvars) * ell_tilde + extend_vars(h, zvars))) {
    throw Error(Errc::InvalidArgument, "internal: homogenization is not g*l~ + h");
  }

  m.new_coord = fresh_name(g.vars(), "y");
  std::vector<std::string> names = g.vars().names();
  names.push_back(m.new_coord);
  const VarsPtr yvars = make_vars(std::move(names));
  m.transformed = extend_vars(g, yvars) * Poly::variable(field, yvars, g.nvars()) +
                  extend_vars(h, yvars);
  if (!is_squarefree_supported(m.transformed)) {
    throw Error(Errc::InvalidArgument, "internal: g*y + h lost square-free support");
  }
  const CIdeal q = disjoint_factorization(m.transformed);
  if (q.size() != 1) throw Error(Errc::InvalidArgument, "internal: g*y + h is reducible");
  m.certificate = build_regularity_certificate(q, e_max);
  m.certificate_check = verify_regularity_certificate(q, m.certificate);

  m.mult_origin = multiplicity_hypersurface(m.f, origin(g.nvars()));
  m.dfpt_origin = static_cast<std::int64_t>(m.mult_origin) - 1;
  return m;
}

/// Local data of a modification at a point of V(f), possibly over an
/// extension field.
struct ModificationPoint {
  Point point;
  int point_degree = 1;
  std::uint32_t mult_f = 0;
  std::uint32_t mult_ftilde = 0;
  std::uint32_t mult_transformed = 0;
  /// mult_f - 1.
  std::int64_t dfpt_f = 0;
  /// dfpt of g*y + h at (point, l(point)) by the closed formula.
  std::int64_t dfpt_transformed = 0;
  /// lambda(e = 1) of g*y + h shifted to (point, l(point)).
  std::optional<Rational> lambda_transformed;
  bool consistent = false;
};

inline ModificationPoint modification_point(const Modification& m, const Field& field,
                                            const Point& pt) {
  ModificationPoint r;
  r.point = pt;
  r.point_degree = field.s();
  const Poly f = change_field(m.f, field);
  const Poly ftilde = change_field(m.ftilde, field);
  const Poly transformed = change_field(m.transformed, field);
  r.mult_f = multiplicity_hypersurface(f, pt);

  Point homogeneous = pt;
  homogeneous.push_back(field.one());
  r.mult_ftilde = multiplicity_hypersurface(ftilde, homogeneous);

  Point moved = pt;
  moved.push_back(evaluate(change_field(m.ell, field), pt));
  const InvariantReport local = dfpt_at(CIdeal({transformed}), moved);
  r.mult_transformed = local.mult;
  r.dfpt_transformed = local.dfpt;
  r.dfpt_f = static_cast<std::int64_t>(r.mult_f) - 1;
  r.lambda_transformed = fpt_oracle(shift_point(transformed, moved), 1).lambda;

  const auto dims = static_cast<std::int64_t>(transformed.nvars());
  r.consistent = r.mult_f == r.mult_ftilde && r.mult_f == r.mult_transformed &&
                 r.dfpt_f == r.dfpt_transformed && r.dfpt_f >= 0 && r.lambda_transformed &&
                 *r.lambda_transformed == Rational(dims - static_cast<std::int64_t>(r.mult_transformed));
  return r;
}

/// The first `limit` points of V(f) in search order over F_{p^s}, s <= s_max.
inline std::vector<ModificationPoint> modification_points(const Modification& m, int s_max,
                                                          std::size_t limit) {
  std::vector<ModificationPoint> out;
  std::optional<Poly> lifted;
  search_points(m.f.field(), m.f.nvars(), s_max, kDefaultPointBudget,
                [&](const Field& field, const Point& pt) {
    if (!lifted || !(lifted->field() == field)) lifted = change_field(m.f, field);
    if (!evaluate(*lifted, pt).is_zero()) return true;
    out.push_back(modification_point(m, field, pt));
    return out.size() < limit;
  });
  return out;
}

inline Json to_json_modification(const Modification& m) {
  return Json{{"f", format_poly(m.f)},
              {"ftilde", format_poly(m.ftilde)},
              {"hom_var", m.hom_var},
              {"transformed", format_poly(m.transformed)},
              {"transformed_vars", to_json_vars(m.transformed.vars())},
              {"new_coord", m.new_coord},
              {"certificate", to_json_certificate(m.certificate, m.transformed.vars())},
              {"certificate_check", to_json_check(m.certificate_check)},
              {"mult_origin", m.mult_origin},
              {"dfpt_origin", m.dfpt_origin}};
}

inline Json to_json_modification_point(const ModificationPoint& r, const Field& base) {
  const Field field = r.point_degree == 1 ? base : Field::build(base.p(), r.point_degree);
  Json out{{"point", to_json_point(r.point, field)},
           {"point_degree", r.point_degree},
           {"mult_f", r.mult_f},
           {"mult_ftilde", r.mult_ftilde},
           {"mult_transformed", r.mult_transformed},
           {"dfpt_f", r.dfpt_f},
           {"consistent", r.consistent}};
  out["lambda_transformed"] =
      r.lambda_transformed ? to_json_rational(*r.lambda_transformed) : Json(nullptr);
  return out;
}

// ---------------------------------------------------------------------------
// Random inputs

/// t irreducible square-free supported factors on disjoint random blocks of
/// the n variables x1..xn, multiplied out. Each factor has no constant term
/// and the product has at most max_terms terms.
inline Poly random_sqfree(const Field& field, std::size_t n, std::size_t max_terms, std::size_t t,
                          std::uint64_t seed) {
  if (t == 0) throw Error(Errc::InvalidArgument, "need at least one factor");
  if (t > n) {
    throw Error(Errc::InvalidArgument, "cannot place " + std::to_string(t) +
                                           " disjoint factors on " + std::to_string(n) +
                                           " variables");
  }
  if (max_terms == 0) throw Error(Errc::InvalidArgument, "max_terms must be positive");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t k) { return rng() % k; };

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  std::vector<std::vector<std::size_t>> blocks(t);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[i < t ? i : below(t)].push_back(perm[i]);
  }

  const VarsPtr vars = numbered_vars(n);
  constexpr int kMaxAttempts = 10'000;
  int attempts = 0;
  std::size_t budget = max_terms;
  Poly product = Poly::one(field, vars);
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    const std::uint64_t subsets = block.size() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << block.size()) - 1;
    const std::uint64_t cap = std::min<std::uint64_t>(budget, subsets);
    const std::size_t k = static_cast<std::size_t>(1 + below(cap));
    budget /= k;
    for (;;) {
      if (++attempts > kMaxAttempts) {
        throw Error(Errc::BudgetExceeded, "no irreducible factor after 10^4 attempts");
      }
      std::set<std::uint64_t> masks;
      while (masks.size() < k) masks.insert(1 + below(subsets));
      std::vector<Term> terms;
      for (auto mask : masks) {
        Monomial mono(n);
        for (std::size_t j = 0; j < block.size(); ++j) {
          if ((mask >> j) & 1) mono.set(block[j], 1);
        }
        const auto c = field.from_int(static_cast<std::int64_t>(1 + below(field.p() - 1)));
        terms.push_back({std::move(mono), c});
      }
      Poly factor = Poly::from_terms(field, vars, std::move(terms));
      if (is_irreducible_sqfree(factor)) {
        product = product * factor;
        break;
      }
    }
  }
  return product;
}

// ---------------------------------------------------------------------------
// Counterexample minimization

/// Greedy single removal: drops terms, then sets variables to zero, while
/// `fails` keeps holding. Candidates that become constant are not tried.
template <class Pred>
Poly minimize_counterexample(Poly f, Pred fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
      std::vector<Term> terms(f.terms().begin(), f.terms().end());
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i));
      Poly candidate = Poly::from_terms(f.field(), f.vars_ptr(), std::move(terms));
      if (candidate.is_constant() || !fails(candidate)) continue;
      f = std::move(candidate);
      changed = true;
      --i;
    }
    for (auto v : variables_of(f)) {
      std::vector<std::optional<Scalar>> values(f.nvars());
      values[v] = f.field().zero();
      Poly candidate = specialize(f, values);
      if (candidate.is_zero() || candidate.is_constant() || !fails(candidate)) continue;
      f = std::move(candidate);
      changed = true;
      break;
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Theorem suite

struct SuiteConfig {
  std::vector<std::uint32_t> primes{2, 3, 5};
  std::size_t n = 8;
  std::size_t max_terms = 8;
  std::size_t max_factors = 3;
  std::size_t count = 200;
  std::uint64_t seed = 0;
  unsigned e_max = 2;
  std::vector<unsigned> crosscheck_e{1, 2};
  /// When > 1, factor counts are also compared over F_{p^s}, s <= s_max.
  int s_max = 1;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Extra inputs checked after the random samples.
  std::vector<Poly> extra_inputs;
  bool timings = false;
};

struct SampleCheck {
  Json details = Json::object();
  std::vector<std::string> failures;
};

/// Runs the theorem checks on one square-free supported f vanishing at the
/// origin. Failures are collected, never thrown.
inline SampleCheck check_sample(const Poly& f, const SuiteConfig& cfg,
                                std::optional<std::size_t> planted_t = std::nullopt) {
  SampleCheck out;
  auto fail = [&](std::string what) { out.failures.push_back(std::move(what)); };
  std::optional<CIdeal> q;
  try {
    FactorizationTrace trace;
    q = disjoint_factorization(f, &trace, cfg.seed);
    out.details["factorization"] = to_json_factorization(*q, &trace);
    if (planted_t && q->size() != *planted_t) {
      fail("factorization: found " + std::to_string(q->size()) + " factors, planted " +
           std::to_string(*planted_t));
    }
  } catch (const Error& e) {
    fail(std::string("factorization: ") + e.what());
    return out;
  }
  for (int s = 2; s <= cfg.s_max; ++s) {
    try {
      if (!extension_stability_check(f, s)) fail("stability: factor count changes over F_{p^" + std::to_string(s) + "}");
    } catch (const Error& e) {
      fail(std::string("stability: ") + e.what());
    }
  }
  try {
    if (auto w = fedder_fsplit(*q, 1)) {
      out.details["fsplit"] = to_json_witness(*w, f.vars());
    } else {
      fail("fsplit: f^(p-1) lies in m^[p]");
    }
  } catch (const Error& e) {
    fail(std::string("fsplit: ") + e.what());
  }
  try {
    const RegCertificate cert = build_regularity_certificate(*q, cfg.e_max);
    const Json encoded = to_json_certificate(cert, f.vars());
    out.details["certificate"] = encoded;
    if (auto check = verify_regularity_certificate(*q, cert); !check) {
      fail("certificate: " + check.reason);
    }
    const RegCertificate decoded = certificate_from_json(encoded, f.field(), f.vars_ptr());
    if (!(decoded == cert) || !verify_regularity_certificate(*q, decoded)) {
      fail("certificate: serialized form does not re-verify");
    }
  } catch (const Error& e) {
    fail(std::string("certificate: ") + e.what());
  }
  try {
    const InvariantReport r = dfpt_at(*q, origin(f.nvars()));
    out.details["dfpt"] = to_json_invariants(r, f.field());
    const auto t = static_cast<std::int64_t>(r.t);
    if (r.dfpt != static_cast<std::int64_t>(r.mult) - t) fail("dfpt: dfpt != mult - t");
    if (r.fpt + Rational(r.dfpt) != Rational(r.dim)) fail("dfpt: fpt + dfpt != dim");
    if (r.dfpt < 0) fail("dfpt: negative");
  } catch (const Error& e) {
    fail(std::string("dfpt: ") + e.what());
  }
  try {
    const auto entries = fpt_crosscheck(*q, cfg.crosscheck_e);
    out.details["crosscheck"] = to_json_crosscheck(entries);
    for (const auto& c : entries) {
      if (!c.discrepancy) {
        fail("crosscheck: not F-split at e=" + std::to_string(c.sample.e));
      } else if (*c.discrepancy != Rational(0)) {
        fail("crosscheck: nonzero discrepancy at e=" + std::to_string(c.sample.e));
      }
    }
  } catch (const Error& e) {
    fail(std::string("crosscheck: ") + e.what());
  }
  return out;
}

namespace detail {

struct SampleSpec {
  std::uint32_t p;
  std::size_t n;
  std::size_t t;
  std::uint64_t poly_seed;
};

inline SampleSpec sample_spec(const SuiteConfig& cfg, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  SampleSpec s;
  s.p = cfg.primes[index % cfg.primes.size()];
  const std::size_t max_t = std::min(cfg.max_factors, cfg.n);
  s.t = 1 + static_cast<std::size_t>(rng() % max_t);
  s.n = s.t + static_cast<std::size_t>(rng() % (cfg.n - s.t + 1));
  s.poly_seed = rng();
  return s;
}

inline Json run_one(const Poly& f, const SuiteConfig& cfg, std::optional<std::size_t> planted_t) {
  Json rec{{"input", format_poly(f)}, {"p", f.field().p()}, {"nvars", f.nvars()}};
  if (f.is_zero() || f.is_constant()) {
    rec["status"] = "skipped";
    rec["reason"] = "constant input";
    return rec;
  }
  if (auto sq = is_squarefree_supported(f); !sq) {
    rec["status"] = "skipped";
    rec["reason"] = "not square-free supported: " + format_monomial(*sq.offending, f.vars());
    return rec;
  }
  if (!evaluate(f, origin(f.nvars())).is_zero()) {
    rec["status"] = "skipped";
    rec["reason"] = "origin is not on V(f)";
    return rec;
  }
  const auto start = std::chrono::steady_clock::now();
  SampleCheck check = check_sample(f, cfg, planted_t);
  rec["checks"] = std::move(check.details);
  if (check.failures.empty()) {
    rec["status"] = "pass";
  } else {
    rec["status"] = "counterexample";
    rec["failures"] = check.failures;
    const Poly reduced = minimize_counterexample(f, [&](const Poly& g) {
      return is_squarefree_supported(g).ok && evaluate(g, origin(g.nvars())).is_zero() &&
             !check_sample(g, cfg).failures.empty();
    });
    rec["reproducer"] = format_poly(reduced);
  }
  if (cfg.timings) {
    rec["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace detail

/// Seeded random samples through every theorem check. Samples run on a
/// thread pool and are reported in index order.
inline Json theorem_suite(const SuiteConfig& cfg) {
  if (cfg.primes.empty()) throw Error(Errc::InvalidArgument, "no primes given");
  for (auto p : cfg.primes) {
    if (p < 2 || p >= kMaxCharacteristic || !detail::is_prime(p)) {
      throw Error(Errc::NotPrime, std::to_string(p) + " is not a prime below 2^16");
    }
  }
  if (cfg.n == 0 || cfg.max_factors == 0 || cfg.max_terms == 0) {
    throw Error(Errc::InvalidArgument, "n, terms and factors must be positive");
  }
  const std::size_t total = cfg.count + cfg.extra_inputs.size();
  std::vector<Json> records(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      Json rec;
      try {
        if (i < cfg.count) {
          const auto spec = detail::sample_spec(cfg, i);
          const Field field = Field::build(spec.p, 1);
          const Poly f = random_sqfree(field, spec.n, cfg.max_terms, spec.t, spec.poly_seed);
          rec = detail::run_one(f, cfg, spec.t);
          rec["planted_t"] = spec.t;
        } else {
          rec = detail::run_one(cfg.extra_inputs[i - cfg.count], cfg, std::nullopt);
          rec["planted"] = true;
        }
      } catch (const std::exception& e) {
        rec["status"] = "counterexample";
        rec["failures"] = Json::array({std::string("generation: ") + e.what()});
      }
      rec["index"] = i;
      records[i] = std::move(rec);
    }
  };
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  std::size_t passed = 0, skipped = 0, failed = 0;
  for (const auto& r : records) {
    const auto status = r.at("status").get<std::string>();
    passed += status == "pass";
    skipped += status == "skipped";
    failed += status == "counterexample";
  }
  Json primes = cfg.primes;
  Json report{{"version", kReportVersion},
              {"field", Json{{"p", primes}, {"s", 1}}},
              {"vars", to_json_vars(*numbered_vars(cfg.n))},
              {"input", Json{{"primes", primes},
                             {"n", cfg.n},
                             {"terms", cfg.max_terms},
                             {"factors", cfg.max_factors},
                             {"count", cfg.count},
                             {"seed", cfg.seed},
                             {"e_max", cfg.e_max},
                             {"crosscheck_e", cfg.crosscheck_e},
                             {"s_max", cfg.s_max},
                             {"extra_inputs", cfg.extra_inputs.size()}}},
              {"results", Json{{"samples", records},
                               {"summary", Json{{"total", total},
                                                {"passed", passed},
                                                {"skipped", skipped},
                                                {"counterexamples", failed}}}}},
              {"status", failed == 0 ? "pass" : "counterexample"}};
  return report;
}

}  // namespace fsing
