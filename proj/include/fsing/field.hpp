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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsing/error.hpp"

namespace fsing {

inline constexpr int kMaxExtensionDegree = 4;
inline constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

/// An element of F_{p^s}, stored as coordinates in the power basis of the
/// field modulus. Coordinates at positions >= s are always zero, so two
/// canonical scalars of the same field compare equal iff they are equal.
struct Scalar {
  std::array<std::uint32_t, kMaxExtensionDegree> coords{};

  bool is_zero() const noexcept {
    for (auto c : coords) {
      if (c != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e,
                             std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

// Dense univariate polynomials over F_p, lowest degree first. Only used to
// pick and validate extension moduli.
using UPoly = std::vector<std::uint32_t>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly upoly_rem(UPoly a, const UPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, m[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline UPoly upoly_mul_rem(const UPoly& a, const UPoly& b, const UPoly& m,
                           std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return upoly_rem(std::move(prod), m, p);
}

inline UPoly upoly_gcd(UPoly a, UPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or: a monic m of degree s is irreducible iff
/// gcd(t^(p^i) - t, m) = 1 for all 1 <= i <= s/2.
inline bool upoly_is_irreducible(const UPoly& m, std::uint32_t p) {
  const std::size_t s = m.size() - 1;
  if (s == 0) return false;
  if (s == 1) return true;
  UPoly power = upoly_rem(UPoly{0, 1}, m, p);  // t^(p^i) mod m
  for (std::size_t i = 1; i <= s / 2; ++i) {
    UPoly base = power;
    UPoly acc{1};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = upoly_mul_rem(acc, base, m, p);
      base = upoly_mul_rem(base, base, m, p);
    }
    power = acc;
    UPoly diff = power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (upoly_gcd(diff, m, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Description of F_{p^s}. Immutable and cheap to copy.
class Field {
 public:
  /// F_p with s = 1.
  Field() : Field(2, {}) {}

  /// The field F_{p^s} with the smallest monic irreducible modulus of
  /// degree s, where candidates t^s + c_{s-1} t^{s-1} + ... + c_0 are ranked
  /// by the integer c_0 + c_1 p + ... + c_{s-1} p^{s-1}.
  static Field build(std::uint32_t p, int s) {
    check_characteristic(p);
    if (s < 1 || s > kMaxExtensionDegree) {
      throw Error(Errc::DegreeOutOfRange,
                  "extension degree must lie in [1, 4], got " +
                      std::to_string(s));
    }
    if (s == 1) return Field(p, {});
    std::uint64_t count = 1;
    for (int i = 0; i < s; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      detail::UPoly candidate(static_cast<std::size_t>(s) + 1, 0);
      std::uint64_t rest = k;
      for (int i = 0; i < s; ++i) {
        candidate[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      candidate.back() = 1;
      if (detail::upoly_is_irreducible(candidate, p)) {
        return Field(p, std::move(candidate));
      }
    }
    throw Error(Errc::DegreeOutOfRange, "no irreducible modulus found");
  }

  /// Explicit modulus (monic, lowest degree first, length s + 1).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    check_characteristic(p);
    const auto s = static_cast<int>(modulus.size()) - 1;
    if (s < 2 || s > kMaxExtensionDegree) {
      throw Error(Errc::DegreeOutOfRange, "modulus degree must lie in [2, 4]");
    }
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) {
      throw Error(Errc::InvalidArgument, "modulus must be monic");
    }
    if (!detail::upoly_is_irreducible(modulus, p)) {
      throw Error(Errc::InvalidArgument, "modulus is reducible");
    }
    return Field(p, std::move(modulus));
  }

  std::uint32_t p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return s_ == 1; }
  /// p^s; fits since p < 2^16 and s <= 4.
  std::uint64_t order() const noexcept { return order_; }

  Scalar zero() const noexcept { return {}; }
  Scalar one() const noexcept {
    Scalar r;
    r.coords[0] = 1;
    return r;
  }

  Scalar from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    Scalar r;
    r.coords[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
    return r;
  }

  Scalar from_coords(std::span<const std::int64_t> coords) const {
    if (coords.size() > static_cast<std::size_t>(s_)) {
      throw Error(Errc::FieldMismatch, "too many coordinates for field");
    }
    Scalar r;
    const auto p = static_cast<std::int64_t>(p_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      r.coords[i] = static_cast<std::uint32_t>(((coords[i] % p) + p) % p);
    }
    return r;
  }

  bool is_canonical(const Scalar& a) const noexcept {
    for (int i = 0; i < kMaxExtensionDegree; ++i) {
      const auto c = a.coords[static_cast<std::size_t>(i)];
      if (i >= s_ ? c != 0 : c >= p_) return false;
    }
    return true;
  }

  bool in_prime_subfield(const Scalar& a) const noexcept {
    for (std::size_t i = 1; i < a.coords.size(); ++i) {
      if (a.coords[i] != 0) return false;
    }
    return true;
  }

  /// Enumeration of the field: index digits in base p are the coordinates.
  Scalar element(std::uint64_t index) const noexcept {
    Scalar r;
    for (int i = 0; i < s_; ++i) {
      r.coords[static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(index % p_);
      index /= p_;
    }
    return r;
  }

  std::uint64_t index_of(const Scalar& a) const noexcept {
    std::uint64_t index = 0;
    for (int i = s_ - 1; i >= 0; --i) {
      index = index * p_ + a.coords[static_cast<std::size_t>(i)];
    }
    return index;
  }

  Scalar add(const Scalar& a, const Scalar& b) const noexcept {
    Scalar r;
    for (int i = 0; i < s_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const std::uint32_t v = a.coords[k] + b.coords[k];
      r.coords[k] = v >= p_ ? v - p_ : v;
    }
    return r;
  }

  Scalar neg(const Scalar& a) const noexcept {
    Scalar r;
    for (int i = 0; i < s_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      r.coords[k] = a.coords[k] == 0 ? 0 : p_ - a.coords[k];
    }
    return r;
  }

  Scalar sub(const Scalar& a, const Scalar& b) const noexcept {
    return add(a, neg(b));
  }

  Scalar mul(const Scalar& a, const Scalar& b) const noexcept {
    Scalar r;
    if (s_ == 1) {
      r.coords[0] = detail::mul_mod(a.coords[0], b.coords[0], p_);
      return r;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> prod{};
    for (int i = 0; i < s_; ++i) {
      for (int j = 0; j < s_; ++j) {
        auto& slot = prod[static_cast<std::size_t>(i + j)];
        slot = (slot + static_cast<std::uint64_t>(a.coords[static_cast<std::size_t>(i)]) *
                           b.coords[static_cast<std::size_t>(j)]) % p_;
      }
    }
    // t^s = -(c_0 + ... + c_{s-1} t^{s-1})
    for (int k = 2 * s_ - 2; k >= s_; --k) {
      const std::uint64_t c = prod[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      prod[static_cast<std::size_t>(k)] = 0;
      for (int j = 0; j < s_; ++j) {
        auto& slot = prod[static_cast<std::size_t>(k - s_ + j)];
        slot = (slot + (p_ - c) * modulus_[static_cast<std::size_t>(j)]) % p_;
      }
    }
    for (int i = 0; i < s_; ++i) {
      r.coords[static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Scalar inv(const Scalar& a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return pow(a, order_ - 2);
  }

  /// a -> a^p; the identity on prime fields.
  Scalar frobenius(const Scalar& a) const noexcept {
    if (s_ == 1) return a;
    return pow(a, p_);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p),
        s_(modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1),
        modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < s_; ++i) order_ *= p_;
  }

  static void check_characteristic(std::uint32_t p) {
    if (p >= kMaxCharacteristic || !detail::is_prime(p)) {
      throw Error(Errc::NotPrime,
                  std::to_string(p) + " is not a prime below 2^16");
    }
  }

  std::uint32_t p_;
  int s_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t order_ = 0;
};

inline Field build_field(std::uint32_t p, int s) { return Field::build(p, s); }

enum class ScalarOp { Add, Mul, Neg, Inv };

/// Checked entry point for single scalar operations; `b` is ignored for the
/// unary kinds.
inline Scalar scalar_arith(const Field& field, const Scalar& a, const Scalar& b,
                           ScalarOp op) {
  if (!field.is_canonical(a) || !field.is_canonical(b)) {
    throw Error(Errc::FieldMismatch, "scalar is not an element of this field");
  }
  switch (op) {
    case ScalarOp::Add: return field.add(a, b);
    case ScalarOp::Mul: return field.mul(a, b);
    case ScalarOp::Neg: return field.neg(a);
    case ScalarOp::Inv: return field.inv(a);
  }
  return field.zero();
}

}  // namespace fsing
