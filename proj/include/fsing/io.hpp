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
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsing/error.hpp"
#include "fsing/field.hpp"
#include "fsing/poly.hpp"

namespace fsing {

// ---------------------------------------------------------------------------
// Formatting

/// Integers for prime fields; coordinate lists like {1,1} otherwise.
inline std::string format_scalar(const Scalar& c, const Field& field) {
  if (field.in_prime_subfield(c)) return std::to_string(c.coords[0]);
  std::string out = "{";
  for (int i = 0; i < field.s(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.coords[static_cast<std::size_t>(i)]);
  }
  return out + "}";
}

/// x^2*y; the empty monomial is "1".
inline std::string format_monomial(const Monomial& m, const Vars& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Terms in ascending monomial order, e.g. "x*y + 2*z*w".
inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const Field& field = f.field();
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    const bool unit = t.coeff == field.one();
    if (t.mono.is_one()) {
      out += format_scalar(t.coeff, field);
    } else if (unit) {
      out += format_monomial(t.mono, f.vars());
    } else {
      out += format_scalar(t.coeff, field) + "*" + format_monomial(t.mono, f.vars());
    }
  }
  return out;
}

inline std::string format_point(const Point& a, const Field& field) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += format_scalar(a[i], field);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column_offset,
             const Field& field, const VarsPtr& vars)
      : text_(text), line_(line), offset_(column_offset), field_(field), vars_(vars) {}

  Poly parse_expression() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    for (;;) {
      Term t = parse_term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      const char c = get();
      if (c != '+' && c != '-') fail(pos_ - 1, "expected '+' or '-'");
      negative = c == '-';
      skip_space();
    }
    return Poly::from_terms(field_, vars_, std::move(terms));
  }

  Monomial parse_monomial_only() {
    skip_space();
    Term t = parse_term();
    skip_space();
    if (!at_end()) fail(pos_, "unexpected trailing input");
    if (!(t.coeff == field_.one())) fail(0, "monomial must not carry a coefficient");
    return t.mono;
  }

 private:
  Term parse_term() {
    Scalar coeff = field_.one();
    Monomial mono(vars_->size());
    bool first = true;
    for (;;) {
      skip_space();
      if (at_end()) fail(pos_, "expected a number or variable");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field_.mul(coeff, parse_integer_mod_p());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        std::string name = parse_identifier();
        auto idx = vars_->index_of(name);
        if (!idx) {
          throw ParseError(Errc::UnknownVariable, line_, offset_ + start + 1,
                           "unknown variable '" + name + "'");
        }
        std::uint32_t exp = 1;
        skip_space();
        if (peek() == '^') {
          get();
          skip_space();
          exp = parse_exponent();
        }
        const std::uint32_t total = std::uint32_t{mono[*idx]} + exp;
        if (total >= kExponentLimit) fail(start, "exponent exceeds 65535");
        mono.set(*idx, static_cast<Exponent>(total));
      } else {
        fail(pos_, first ? "expected a number or variable" : "expected a factor after '*'");
      }
      first = false;
      skip_space();
      if (peek() != '*') break;
      get();
    }
    return {std::move(mono), coeff};
  }

  Scalar parse_integer_mod_p() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(get() - '0')) % field_.p();
    }
    return field_.from_int(static_cast<std::int64_t>(v));
  }

  std::uint32_t parse_exponent() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(start, "malformed exponent");
    }
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v >= kExponentLimit) fail(start, "exponent exceeds 65535");
    }
    return static_cast<std::uint32_t>(v);
  }

  std::string parse_identifier() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += get();
    }
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    throw ParseError(Errc::SyntaxError, line_, offset_ + pos + 1, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t offset_;
  const Field& field_;
  const VarsPtr& vars_;
};

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::int64_t v = 0;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
    if (s.size() == 1) return std::nullopt;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

// Splits text into lines with comments removed.
inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  lines.push_back(current);
  for (auto& l : lines) {
    if (auto hash = l.find('#'); hash != std::string::npos) l.erase(hash);
  }
  return lines;
}

}  // namespace detail

/// Parses a polynomial in the given ring, e.g. "x*y + 2*z^2*w - 1".
inline Poly parse_poly(std::string_view text, const Field& field, const VarsPtr& vars) {
  return detail::ExprParser(text, 1, 0, field, vars).parse_expression();
}

inline Monomial parse_monomial(std::string_view text, const Field& field, const VarsPtr& vars) {
  return detail::ExprParser(text, 1, 0, field, vars).parse_monomial_only();
}

struct ParsedInput {
  Field field;
  VarsPtr vars;
  std::vector<std::pair<std::string, Poly>> polys;

  const Poly* find(std::string_view name) const {
    for (const auto& [n, p] : polys) {
      if (n == name) return &p;
    }
    return nullptr;
  }
};

/// Reads the line-oriented .poly format:
///   p <prime>, optional ext <s>, vars <name>+, poly <name>: <expr>
inline ParsedInput parse_input(std::string_view text) {
  std::optional<std::int64_t> p;
  int ext = 1;
  std::optional<Field> field;
  VarsPtr vars;
  std::vector<std::pair<std::string, Poly>> polys;

  const auto lines = detail::content_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const std::string& raw = lines[ln];
    const auto body = detail::strip(raw);
    if (body.empty()) continue;
    const std::size_t indent = static_cast<std::size_t>(body.data() - raw.data());
    const auto words = detail::split_words(body);
    const std::string& key = words[0];
    auto syntax = [&](const std::string& msg, std::size_t col = 0) {
      return ParseError(Errc::SyntaxError, line_no, indent + col + 1, msg);
    };
    if (key == "p" || key == "ext") {
      if (field) throw syntax("field must be declared before any polynomial");
      if (words.size() != 2) throw syntax("expected '" + key + " <int>'");
      auto v = detail::parse_int(words[1]);
      if (!v) throw ParseError(Errc::BadFieldSpec, line_no, indent + 1, "not an integer");
      if (key == "p") {
        if (*v < 2 || *v >= kMaxCharacteristic || !detail::is_prime(static_cast<std::uint64_t>(*v))) {
          throw ParseError(Errc::BadFieldSpec, line_no, indent + 1,
                           words[1] + " is not a prime below 2^16");
        }
        p = *v;
      } else {
        if (*v < 1 || *v > kMaxExtensionDegree) {
          throw ParseError(Errc::BadFieldSpec, line_no, indent + 1, "ext must lie in [1, 4]");
        }
        ext = static_cast<int>(*v);
      }
    } else if (key == "vars") {
      if (vars) throw syntax("vars declared twice");
      if (words.size() < 2) throw syntax("expected at least one variable name");
      try {
        vars = make_vars(std::vector<std::string>(words.begin() + 1, words.end()));
      } catch (const Error& e) {
        throw syntax(e.what());
      }
    } else if (key == "poly") {
      if (!p) throw ParseError(Errc::BadFieldSpec, line_no, indent + 1, "missing 'p' line");
      if (!vars) throw syntax("missing 'vars' line");
      if (!field) field = Field::build(static_cast<std::uint32_t>(*p), ext);
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) throw syntax("expected 'poly <name>: <expr>'");
      const auto name = detail::strip(body.substr(4, colon - 4));
      if (!Vars::is_identifier(name)) throw syntax("invalid polynomial name", 5);
      for (const auto& [existing, poly] : polys) {
        if (existing == name) throw syntax("duplicate polynomial '" + std::string(name) + "'");
      }
      const auto expr = body.substr(colon + 1);
      detail::ExprParser parser(expr, line_no, indent + colon + 1, *field, vars);
      polys.emplace_back(std::string(name), parser.parse_expression());
    } else {
      throw syntax("unknown directive '" + key + "'");
    }
  }
  if (!p) throw ParseError(Errc::BadFieldSpec, 1, 1, "missing 'p' line");
  if (!vars) throw ParseError(Errc::SyntaxError, 1, 1, "missing 'vars' line");
  if (!field) field = Field::build(static_cast<std::uint32_t>(*p), ext);
  return {*field, vars, std::move(polys)};
}

/// Comma-separated integer coordinates, reduced into the prime subfield.
inline Point parse_point(std::string_view text, const Field& field, std::size_t n) {
  Point out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = detail::strip(text.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start));
    auto v = detail::parse_int(piece);
    if (!v) throw Error(Errc::SyntaxError, "bad point coordinate '" + std::string(piece) + "'");
    out.push_back(field.from_int(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != n) {
    throw Error(Errc::ContextMismatch, "point needs " + std::to_string(n) + " coordinates");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matroids

struct MatroidInput {
  std::size_t n = 0;
  /// 1-based element lists, each sorted.
  std::vector<std::vector<std::size_t>> bases;
};

/// Reads the .matroid format: "matroid", "n <int>", then "basis i1 i2 ..."
/// lines. Structural checks only; the exchange axiom is not verified here.
inline MatroidInput parse_matroid(std::string_view text) {
  MatroidInput m;
  bool header = false;
  bool have_n = false;
  const auto lines = detail::content_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto body = detail::strip(lines[ln]);
    if (body.empty()) continue;
    const auto words = detail::split_words(body);
    auto syntax = [&](const std::string& msg) {
      return ParseError(Errc::SyntaxError, ln + 1, 1, msg);
    };
    if (!header) {
      if (words.size() != 1 || words[0] != "matroid") throw syntax("expected 'matroid' header");
      header = true;
    } else if (words[0] == "n") {
      if (have_n || words.size() != 2) throw syntax("expected a single 'n <int>' line");
      auto v = detail::parse_int(words[1]);
      if (!v || *v < 1) throw syntax("ground set size must be a positive integer");
      m.n = static_cast<std::size_t>(*v);
      have_n = true;
    } else if (words[0] == "basis") {
      if (!have_n) throw syntax("'n' must precede the bases");
      std::vector<std::size_t> basis;
      for (std::size_t i = 1; i < words.size(); ++i) {
        auto v = detail::parse_int(words[i]);
        if (!v) throw syntax("basis elements must be integers");
        if (*v < 1 || static_cast<std::size_t>(*v) > m.n) {
          throw Error(Errc::IndexOutOfRange, "basis element " + words[i] + " outside 1.." +
                                                 std::to_string(m.n));
        }
        basis.push_back(static_cast<std::size_t>(*v));
      }
      std::sort(basis.begin(), basis.end());
      if (std::adjacent_find(basis.begin(), basis.end()) != basis.end()) {
        throw syntax("basis repeats an element");
      }
      m.bases.push_back(std::move(basis));
    } else {
      throw syntax("unknown directive '" + words[0] + "'");
    }
  }
  if (!header || !have_n) throw ParseError(Errc::SyntaxError, 1, 1, "incomplete matroid file");
  if (m.bases.empty()) throw Error(Errc::EmptyBases, "matroid has no bases");
  return m;
}

}  // namespace fsing
