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

#include <gtest/gtest.h>

#include "fsing/field.hpp"

namespace fsing {
namespace {

TEST(Field, PrimeFieldHasNoModulus) {
  const Field f = build_field(2, 1);
  EXPECT_EQ(f.p(), 2u);
  EXPECT_EQ(f.s(), 1);
  EXPECT_TRUE(f.modulus().empty());
  EXPECT_EQ(f.order(), 2u);
}

TEST(Field, QuadraticExtensionOfTwo) {
  // t^2 + t + 1 is the only irreducible quadratic over F_2.
  const Field f = build_field(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f.order(), 4u);
}

TEST(Field, RejectsCompositeCharacteristic) {
  try {
    build_field(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  EXPECT_THROW(build_field(1, 1), Error);
  EXPECT_THROW(build_field(65537, 1), Error);
}

TEST(Field, RejectsDegreeOutOfRange) {
  try {
    build_field(3, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeOutOfRange);
  }
  EXPECT_THROW(build_field(3, 0), Error);
}

TEST(Field, PrimeFieldArithmetic) {
  const Field f = build_field(5, 1);
  EXPECT_EQ(scalar_arith(f, f.from_int(2), {}, ScalarOp::Inv), f.from_int(3));
  EXPECT_EQ(scalar_arith(f, f.from_int(4), f.from_int(3), ScalarOp::Add), f.from_int(2));
  EXPECT_EQ(scalar_arith(f, f.from_int(4), {}, ScalarOp::Neg), f.from_int(1));
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_EQ(f.from_int(7), f.from_int(2));
}

TEST(Field, ExtensionMultiplication) {
  const Field f = build_field(2, 2);
  const std::int64_t t[] = {0, 1};
  const std::int64_t t_plus_one[] = {1, 1};
  EXPECT_EQ(f.mul(f.from_coords(t), f.from_coords(t)), f.from_coords(t_plus_one));
}

TEST(Field, Frobenius) {
  const Field f3 = build_field(3, 1);
  EXPECT_EQ(f3.frobenius(f3.from_int(2)), f3.from_int(2));
  const Field f4 = build_field(2, 2);
  const std::int64_t t[] = {0, 1};
  const std::int64_t t_plus_one[] = {1, 1};
  EXPECT_EQ(f4.frobenius(f4.from_coords(t)), f4.from_coords(t_plus_one));
  EXPECT_EQ(f4.frobenius(f4.one()), f4.one());
}

TEST(Field, InverseOfZeroThrows) {
  const Field f = build_field(7, 1);
  try {
    (void)f.inv(f.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(Field, NonCanonicalScalarIsFieldMismatch) {
  const Field f = build_field(3, 1);
  Scalar bad;
  bad.coords[0] = 5;
  try {
    (void)scalar_arith(f, bad, f.one(), ScalarOp::Add);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Field, ElementIndexRoundTrip) {
  const Field f = build_field(3, 3);
  for (std::uint64_t i = 0; i < f.order(); ++i) EXPECT_EQ(f.index_of(f.element(i)), i);
}

// Field axioms, exhaustively on small fields.
class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, int>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto [p, s] = GetParam();
  const Field f = build_field(p, s);
  const std::uint64_t q = f.order();
  for (std::uint64_t i = 0; i < q; ++i) {
    const Scalar a = f.element(i);
    EXPECT_EQ(f.add(a, f.zero()), a);
    EXPECT_EQ(f.mul(a, f.one()), a);
    EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
    if (!a.is_zero()) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
    EXPECT_EQ(f.pow(a, q), a);
    for (std::uint64_t j = 0; j < q; ++j) {
      const Scalar b = f.element(j);
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      // Frobenius is a ring map.
      EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
      EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      for (std::uint64_t k = 0; k < q; ++k) {
        const Scalar c = f.element(k);
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1}, std::pair{3u, 1}, std::pair{5u, 1},
                                           std::pair{7u, 1}, std::pair{2u, 2}, std::pair{3u, 2}));

TEST(Field, BuiltModulusIsIrreducible) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int s = 2; s <= 4; ++s) {
      const Field f = build_field(p, s);
      // No element of F_p is a root.
      for (std::uint32_t r = 0; r < p; ++r) {
        std::uint64_t v = 0, pw = 1;
        for (auto c : f.modulus()) {
          v = (v + c * pw) % p;
          pw = pw * r % p;
        }
        EXPECT_NE(v, 0u) << p << "^" << s << " root " << r;
      }
      // The multiplicative group has the expected order.
      const Scalar g = f.element(p);  // the class of t
      EXPECT_EQ(f.pow(g, f.order() - 1), f.one());
    }
  }
}

}  // namespace
}  // namespace fsing
