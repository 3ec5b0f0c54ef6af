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

#include <string>
#include <vector>

#include "fsing/fsing.hpp"

namespace testing_util {

/// Ring with the named variables over F_{p^s}.
struct Ring {
  fsing::Field field;
  fsing::VarsPtr vars;

  Ring(std::uint32_t p, std::vector<std::string> names, int s = 1)
      : field(fsing::Field::build(p, s)), vars(fsing::make_vars(std::move(names))) {}

  fsing::Poly operator()(const std::string& text) const { return fsing::parse_poly(text, field, vars); }
  fsing::Monomial mono(const std::string& text) const { return fsing::parse_monomial(text, field, vars); }
  fsing::Point point(std::vector<std::int64_t> coords) const {
    fsing::Point out;
    for (auto c : coords) out.push_back(field.from_int(c));
    return out;
  }
};

inline std::vector<std::string> names(const std::string& spaced) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spaced + " ") {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace testing_util
