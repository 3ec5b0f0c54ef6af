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

#include <random>

#include <gtest/gtest.h>

#include "fsing/bracket.hpp"
#include "fsing/io.hpp"
#include "fsing/poly.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

namespace fsing {
namespace {

using testing_util::names;
using testing_util::Ring;

TEST(Vars, RejectsDuplicatesAndBadNames) {
  EXPECT_THROW(make_vars({"x", "x"}), Error);
  EXPECT_THROW(make_vars({"1x"}), Error);
  EXPECT_THROW(make_vars({}), Error);
  EXPECT_EQ(numbered_vars(3)->name(2), "x3");
}

TEST(Monomial, GradedLexOrder) {
  Ring r(2, names("x y z w"));
  EXPECT_LT(r.mono("x*y"), r.mono("z*w"));
  EXPECT_LT(r.mono("w"), r.mono("x*y"));
  EXPECT_LT(r.mono("x"), r.mono("y"));
  EXPECT_LT(Monomial(4), r.mono("x"));
}

TEST(Monomial, ExponentOverflowIsReported) {
  Monomial a(std::vector<Exponent>{60000});
  try {
    (void)(a * a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExponentOverflow);
  }
}

TEST(Poly, Arithmetic) {
  Ring r(2, names("x y z w"));
  EXPECT_EQ(poly_arith(r("x+y"), r("z+w"), PolyOp::Mul), r("x*z + x*w + y*z + y*w"));
  EXPECT_EQ(poly_arith(r("x+y"), r("x+z"), PolyOp::Add), r("y+z"));
  EXPECT_TRUE((r("x*y+z*w") * r("0")).is_zero());
}

TEST(Poly, ContextMismatch) {
  Ring a(2, names("x y"));
  Ring b(2, names("x z"));
  Ring c(3, names("x y"));
  EXPECT_THROW(a("x") + b("x"), Error);
  try {
    (void)(a("x") * c("x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
}

TEST(Poly, CanonicalFormDropsZeros) {
  Ring r(3, names("x y"));
  EXPECT_TRUE((r("x + 2*x")).is_zero());
  EXPECT_EQ(r("x*y + x*y"), r("2*x*y"));
  EXPECT_EQ(r("y*x"), r("x*y"));
}

TEST(Poly, PartialDerivative) {
  Ring r(2, names("x y z w"));
  EXPECT_EQ(partial_derivative(r("x*y+z*w"), 0), r("y"));
  EXPECT_TRUE(partial_derivative(r("x*y"), 2).is_zero());
  EXPECT_TRUE(partial_derivative(r("x^2*y"), 0).is_zero());
  EXPECT_THROW(partial_derivative(r("x"), 4), Error);
}

TEST(Poly, ShiftPoint) {
  Ring r(2, names("x y z w"));
  EXPECT_EQ(shift_point(r("x*y+z*w"), r.point({1, 0, 0, 0})), r("x*y + y + z*w"));
  EXPECT_EQ(shift_point(r("x*y+z*w"), origin(4)), r("x*y+z*w"));
  Ring r3(3, names("x y"));
  EXPECT_EQ(shift_point(r3("x"), r3.point({1, 0})), r3("x + 1"));
}

TEST(Poly, Evaluate) {
  Ring r(2, names("x y z w"));
  EXPECT_EQ(evaluate(r("x*y+z*w"), r.point({1, 1, 0, 0})), r.field.one());
  EXPECT_EQ(evaluate(r("x*y+1"), origin(4)), r.field.one());
  Ring r2(2, names("x y"));
  EXPECT_EQ(evaluate(r2("x+y"), r2.point({1, 1})), r2.field.zero());
  EXPECT_THROW(evaluate(r2("x"), r.point({1})), Error);
}

TEST(Poly, ExactDivide) {
  Ring r(3, names("x y z w"));
  auto q = exact_divide(r("x*z+x*w+y*z+y*w"), r("x+y"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, r("z+w"));
  EXPECT_FALSE(exact_divide(r("x*y+z*w"), r("x+y")));
  // x + y = 0 at (1, 2, 1, 0) but xy + zw = 2 there, so x + y cannot divide.
  EXPECT_TRUE(evaluate(r("x+y"), r.point({1, 2, 1, 0})).is_zero());
  EXPECT_FALSE(evaluate(r("x*y+z*w"), r.point({1, 2, 1, 0})).is_zero());
  const Poly f = r("x*y + 2*z*w*x");
  EXPECT_EQ(*exact_divide(f, f), r("1"));
  try {
    (void)exact_divide(f, r("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDivisor);
  }
}

TEST(Poly, Homogenize) {
  Ring r(2, names("x y z w"));
  Ring h(2, names("x y z w z0"));
  EXPECT_EQ(homogenize(r("x*y+z*w+x*z*w"), "z0"), h("x*y*z0 + z*w*z0 + x*z*w"));
  EXPECT_EQ(homogenize(r("x*y+z*w"), "z0"), h("x*y+z*w"));
  Ring r1(2, names("x"));
  Ring h1(2, names("x z0"));
  EXPECT_EQ(homogenize(r1("x+1"), "z0"), h1("x + z0"));
  try {
    (void)homogenize(r("x"), "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NameCollision);
  }
}

TEST(Poly, OrderAndInitial) {
  Ring r(2, names("x y z w"));
  auto oi = order_and_initial(r("x*y + z*w + x*z*w"));
  EXPECT_EQ(oi.ord, 2u);
  EXPECT_EQ(oi.initial, r("x*y+z*w"));
  oi = order_and_initial(r("y + x*y + z*w"));
  EXPECT_EQ(oi.ord, 1u);
  EXPECT_EQ(oi.initial, r("y"));
  try {
    (void)order_and_initial(r("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroInput);
  }
}

Poly random_poly(const Ring& r, std::mt19937_64& rng, std::size_t max_terms, unsigned max_exp) {
  std::vector<Term> terms;
  const std::size_t k = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Exponent> e(r.vars->size());
    for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
    terms.push_back({Monomial(e), r.field.element(rng() % r.field.order())});
  }
  return Poly::from_terms(r.field, r.vars, std::move(terms));
}

TEST(PolyProperties, OrderIsAdditiveAndInitialFormsMultiply) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r(p, names("x y z"));
    for (int i = 0; i < 100; ++i) {
      const Poly f = random_poly(r, rng, 4, 2);
      const Poly g = random_poly(r, rng, 4, 2);
      if (f.is_zero() || g.is_zero()) continue;
      const auto of = order_and_initial(f), og = order_and_initial(g), ofg = order_and_initial(f * g);
      EXPECT_EQ(ofg.ord, of.ord + og.ord);
      EXPECT_EQ(ofg.initial, of.initial * og.initial);
    }
  }
}

TEST(PolyProperties, ShiftThereAndBack) {
  std::mt19937_64 rng(12);
  for (int s : {1, 2}) {
    Ring r(3, names("x y z"), s);
    for (int i = 0; i < 100; ++i) {
      const Poly f = random_poly(r, rng, 5, 3);
      Point a, minus_a;
      for (int j = 0; j < 3; ++j) {
        a.push_back(r.field.element(rng() % r.field.order()));
        minus_a.push_back(r.field.neg(a.back()));
      }
      EXPECT_EQ(shift_point(shift_point(f, a), minus_a), f);
    }
  }
}

TEST(PolyProperties, ExactDivisionOfProducts) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Ring r(i % 2 == 0 ? 2 : 3, names("a b c d e"));
    const Poly f = oracle::random_multilinear(r.field, r.vars, 1 + rng() % 4, rng);
    const Poly g = oracle::random_multilinear(r.field, r.vars, 1 + rng() % 4, rng);
    auto q = exact_divide(f * g, g);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, f);
  }
}

TEST(PolyProperties, SpecializeMatchesEvaluate) {
  std::mt19937_64 rng(14);
  Ring r(5, names("x y z"));
  for (int i = 0; i < 50; ++i) {
    const Poly f = random_poly(r, rng, 6, 3);
    const Point a = r.point({static_cast<std::int64_t>(rng() % 5), static_cast<std::int64_t>(rng() % 5),
                             static_cast<std::int64_t>(rng() % 5)});
    std::vector<std::optional<Scalar>> all(a.begin(), a.end());
    const Poly c = specialize(f, all);
    EXPECT_TRUE(c.is_constant());
    EXPECT_EQ(c.is_zero() ? r.field.zero() : c.terms().front().coeff, evaluate(f, a));
  }
}

TEST(Bracket, Membership) {
  Ring r(2, names("x y"));
  EXPECT_TRUE(in_bracket_power(r.mono("x^2"), 2));
  EXPECT_FALSE(in_bracket_power(r.mono("x*y"), 2));
  EXPECT_EQ(bracket_exponent(3, 2), 9u);
  EXPECT_THROW(bracket_exponent(2, 17), Error);
  EXPECT_EQ(reduce_mod_bracket(r("x^2 + x*y"), 2), r("x*y"));
}

TEST(Bracket, FrobeniusPowerExamples) {
  Ring r3(3, names("x y"));
  EXPECT_EQ(frobenius_power_mod_bracket(r3("x+y"), 1), r3("x^2 + 2*x*y + y^2"));
  Ring r2(2, names("x y z w"));
  EXPECT_EQ(frobenius_power_mod_bracket(r2("x*y+z*w"), 2),
            r2("x^3*y^3 + x^2*y^2*z*w + x*y*z^2*w^2 + z^3*w^3"));
  Ring r1(2, names("x"));
  EXPECT_TRUE(frobenius_power_mod_bracket(r1("x^2"), 1).is_zero());
  EXPECT_THROW(frobenius_power_mod_bracket(r1("0"), 1), Error);
}

TEST(Bracket, MatchesNaiveExpansion) {
  std::mt19937_64 rng(15);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto all = names("x y z");
      Ring r(p, std::vector<std::string>(all.begin(), all.begin() + static_cast<long>(n)));
      for (int i = 0; i < 60; ++i) {
        const Poly f = random_poly(r, rng, 3, 3);
        if (f.is_zero()) continue;
        for (unsigned e = 1; e <= 2; ++e) {
          const auto naive = oracle::power_mod_bracket(oracle::from_poly(f), bracket_exponent(p, e));
          EXPECT_TRUE(oracle::equal(naive, frobenius_power_mod_bracket(f, e))) << format_poly(f) << " e=" << e;
          ++cases;
        }
      }
    }
  }
  EXPECT_GE(cases, 500);
}

TEST(Bracket, ExtensionFieldPowerMatchesRepeatedMultiplication) {
  std::mt19937_64 rng(16);
  Ring r(2, names("x y z"), 2);
  for (int i = 0; i < 40; ++i) {
    const Poly f = random_poly(r, rng, 3, 1);
    if (f.is_zero()) continue;
    for (unsigned e = 1; e <= 2; ++e) {
      const std::uint32_t q = bracket_exponent(2, e);
      EXPECT_EQ(frobenius_power_mod_bracket(f, e), reduce_mod_bracket(pow(f, q - 1), q));
    }
  }
}

}  // namespace
}  // namespace fsing
