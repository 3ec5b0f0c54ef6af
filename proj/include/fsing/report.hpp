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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsing/error.hpp"
#include "fsing/frobenius.hpp"
#include "fsing/invariants.hpp"
#include "fsing/io.hpp"
#include "fsing/structure.hpp"

namespace fsing {

using Json = nlohmann::json;

inline constexpr const char* kReportVersion = "0.1.0";

inline Json to_json_rational(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

inline Json to_json_scalar(const Scalar& c, const Field& field) {
  if (field.is_prime_field()) return c.coords[0];
  Json out = Json::array();
  for (int i = 0; i < field.s(); ++i) out.push_back(c.coords[static_cast<std::size_t>(i)]);
  return out;
}

inline Json to_json_point(const Point& a, const Field& field) {
  Json out = Json::array();
  for (const auto& c : a) out.push_back(to_json_scalar(c, field));
  return out;
}

inline Json to_json_field(const Field& field) {
  Json out{{"p", field.p()}, {"s", field.s()}};
  if (!field.is_prime_field()) out["modulus"] = field.modulus();
  return out;
}

inline Json to_json_vars(const Vars& vars) {
  Json out = Json::array();
  for (std::size_t i = 0; i < vars.size(); ++i) out.push_back(vars.name(i));
  return out;
}

inline Json to_json_witness(const SplitWitness& w, const Vars& vars) {
  return Json{{"e", w.e}, {"q", w.q}, {"witness", format_monomial(w.witness, vars)}};
}

inline Json to_json_certificate(const RegCertificate& cert, const Vars& vars) {
  Json stages = Json::array();
  for (const auto& s : cert.stages) {
    stages.push_back(Json{{"inverted", vars.name(s.inverted_var)},
                          {"e", s.e},
                          {"multiplier", format_monomial(s.multiplier, vars)},
                          {"witness", format_monomial(s.witness, vars)}});
  }
  Json base = Json::array();
  for (const auto& b : cert.base) {
    base.push_back(Json{{"factor", b.factor}, {"unit_monomial", format_monomial(b.unit_monomial, vars)}});
  }
  return Json{{"stages", stages},
              {"base", base},
              {"discharged", cert.discharged},
              {"used_fallback", cert.used_fallback}};
}

/// Inverse of to_json_certificate; monomials are parsed in the given ring.
inline RegCertificate certificate_from_json(const Json& j, const Field& field, const VarsPtr& vars) {
  try {
    RegCertificate cert;
    for (const auto& s : j.at("stages")) {
      const auto name = s.at("inverted").get<std::string>();
      const auto idx = vars->index_of(name);
      if (!idx) throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'");
      cert.stages.push_back({*idx, s.at("e").get<unsigned>(),
                             parse_monomial(s.at("multiplier").get<std::string>(), field, vars),
                             parse_monomial(s.at("witness").get<std::string>(), field, vars)});
    }
    for (const auto& b : j.at("base")) {
      cert.base.push_back({b.at("factor").get<std::size_t>(),
                           parse_monomial(b.at("unit_monomial").get<std::string>(), field, vars)});
    }
    cert.discharged = j.at("discharged").get<std::vector<std::size_t>>();
    cert.used_fallback = j.value("used_fallback", false);
    return cert;
  } catch (const Json::exception& e) {
    throw Error(Errc::SyntaxError, std::string("malformed certificate: ") + e.what());
  }
}

inline Json to_json_check(const CertificateCheck& c) {
  Json out{{"ok", c.ok}};
  if (c.failing_stage) out["failing_stage"] = *c.failing_stage;
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

inline Json to_json_factorization(const CIdeal& q, const FactorizationTrace* trace = nullptr) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    Json vs = Json::array();
    for (auto v : q.varsets()[i]) vs.push_back(q.vars_ptr()->name(v));
    factors.push_back(Json{{"poly", format_poly(q.factor(i))}, {"vars", vs}});
  }
  Json out{{"t", q.size()}, {"unit", to_json_scalar(q.unit(), q.field())}, {"factors", factors}};
  if (trace != nullptr) {
    out["path"] = trace->path == FactorPath::Coupling ? "coupling" : "exhaustive";
  }
  return out;
}

inline Json to_json_invariants(const InvariantReport& r, const Field& field) {
  return Json{{"point", to_json_point(r.point, field)},
              {"point_degree", r.point_degree},
              {"mult", r.mult},
              {"factor_orders", r.factor_orders},
              {"t", r.t},
              {"dim", r.dim},
              {"dfpt", r.dfpt},
              {"fpt", to_json_rational(r.fpt)}};
}

inline Json to_json_fpt_sample(const FptSample& s) {
  Json out{{"e", s.e}, {"q", s.q}, {"split", s.b.has_value()}};
  if (s.b) out["b"] = *s.b;
  if (s.lambda) out["lambda"] = to_json_rational(*s.lambda);
  return out;
}

inline Json to_json_crosscheck(const std::vector<CrosscheckEntry>& entries) {
  Json out = Json::array();
  for (const auto& c : entries) {
    Json j = to_json_fpt_sample(c.sample);
    j["discrepancy"] = c.discrepancy ? to_json_rational(*c.discrepancy) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace fsing
