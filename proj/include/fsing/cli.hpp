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
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsing/error.hpp"
#include "fsing/frobenius.hpp"
#include "fsing/invariants.hpp"
#include "fsing/io.hpp"
#include "fsing/pipeline.hpp"
#include "fsing/report.hpp"
#include "fsing/structure.hpp"

namespace fsing::cli {

enum ExitCode : int { kPass = 0, kCounterexample = 1, kInputError = 2 };

inline const std::vector<std::string>& all_tests() {
  static const std::vector<std::string> tests{"factor", "fsplit", "fregular", "dfpt", "fpt", "global"};
  return tests;
}

struct CheckOptions {
  std::string tests = "all";
  std::optional<std::string> point;
  unsigned e_max = 3;
  int s_max = 3;
  std::uint64_t seed = 0;
};

/// Results of one run, in both renderings.
struct Outcome {
  Json results = Json::object();
  std::vector<std::string> text;
  std::vector<std::string> failures;

  void fail(std::string what) {
    text.push_back("FAILED: " + what);
    failures.push_back(std::move(what));
  }
};

inline std::string field_name(const Field& field) {
  if (field.is_prime_field()) return "F_" + std::to_string(field.p());
  return "F_" + std::to_string(field.p()) + "^" + std::to_string(field.s());
}

inline std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      const auto piece = std::string(detail::strip(cur));
      if (!piece.empty()) out.push_back(piece);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

inline std::vector<std::string> selected_tests(const std::string& list) {
  std::vector<std::string> out;
  for (const auto& name : split_list(list)) {
    if (name == "all") return all_tests();
    if (std::find(all_tests().begin(), all_tests().end(), name) == all_tests().end()) {
      throw Error(Errc::InvalidArgument, "unknown test '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "no tests selected");
  return out;
}

inline std::string invariants_text(const InvariantReport& r, const Field& field) {
  std::ostringstream s;
  s << "at " << format_point(r.point, field) << ": mult " << r.mult << ", t " << r.t << ", dim "
    << r.dim << ", dfpt " << r.dfpt << ", fpt " << rational_text(r.fpt);
  return s.str();
}

/// Input validation for the theorem checks; throws on input errors.
inline void require_theorem_input(const Poly& f) {
  if (f.is_zero() || f.is_constant()) throw Error(Errc::ZeroOrConstant, "input is constant");
  if (auto sq = is_squarefree_supported(f); !sq) {
    throw Error(Errc::NotSquareFreeSupported,
                "not square-free supported: monomial " + format_monomial(*sq.offending, f.vars()));
  }
}

/// The theorem checks on a square-free supported polynomial.
inline Outcome run_checks(const Poly& f, const CheckOptions& opt) {
  require_theorem_input(f);
  const auto tests = selected_tests(opt.tests);
  auto wants = [&](const char* name) {
    return std::find(tests.begin(), tests.end(), name) != tests.end();
  };
  const bool at_origin = wants("fsplit") || wants("fregular") || wants("fpt");
  if (at_origin && !evaluate(f, origin(f.nvars())).is_zero()) {
    throw Error(Errc::PointNotOnVariety, "the origin is not on V(f)");
  }
  std::optional<Point> point;
  if (opt.point) point = parse_point(*opt.point, f.field(), f.nvars());

  Outcome out;
  FactorizationTrace trace;
  const CIdeal q = disjoint_factorization(f, &trace, opt.seed);
  if (wants("factor")) {
    out.results["factor"] = to_json_factorization(q, &trace);
    out.text.push_back("factor: " + std::to_string(q.size()) + " factor(s)");
    for (const auto& g : q.factors()) out.text.push_back("  " + format_poly(g));
  }
  if (wants("fsplit")) {
    if (auto w = fedder_fsplit(q, 1)) {
      out.results["fsplit"] = to_json_witness(*w, f.vars());
      out.text.push_back("fsplit: split at e=1, witness " + format_monomial(w->witness, f.vars()));
    } else {
      out.results["fsplit"] = Json{{"e", 1}, {"witness", nullptr}};
      out.fail("fsplit: f^(p-1) lies in m^[p]");
    }
  }
  if (wants("fregular")) {
    try {
      const RegCertificate cert = build_regularity_certificate(q, opt.e_max);
      const CertificateCheck check = verify_regularity_certificate(q, cert);
      out.results["fregular"] = Json{{"certificate", to_json_certificate(cert, f.vars())},
                                     {"check", to_json_check(check)}};
      if (check) {
        out.text.push_back("fregular: certificate with " + std::to_string(cert.stages.size()) +
                           " stage(s), verified");
        for (const auto& s : cert.stages) {
          out.text.push_back("  invert " + f.vars().name(s.inverted_var) + " at e=" +
                             std::to_string(s.e) + ", witness " +
                             format_monomial(s.witness, f.vars()));
        }
      } else {
        out.fail("fregular: certificate does not verify: " + check.reason);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::CertificateSearchExhausted) throw;
      out.results["fregular"] = Json{{"certificate", nullptr}, {"error", e.what()}};
      out.fail(std::string("fregular: ") + e.what());
    }
  }
  if (wants("dfpt")) {
    const Point a = point ? *point : origin(f.nvars());
    const InvariantReport r = dfpt_at(q, a);
    out.results["dfpt"] = to_json_invariants(r, f.field());
    out.text.push_back("dfpt: " + invariants_text(r, f.field()));
  }
  if (wants("fpt")) {
    const std::vector<unsigned> es{1, 2};
    const auto entries = fpt_crosscheck(q, es);
    out.results["fpt"] = to_json_crosscheck(entries);
    for (const auto& c : entries) {
      if (!c.discrepancy) {
        out.fail("fpt: not F-split at e=" + std::to_string(c.sample.e));
        continue;
      }
      out.text.push_back("fpt: e=" + std::to_string(c.sample.e) + " q=" + std::to_string(c.sample.q) +
                         " lambda " + rational_text(*c.sample.lambda) + ", discrepancy " +
                         rational_text(*c.discrepancy));
      if (*c.discrepancy != Rational(0)) {
        out.fail("fpt: nonzero discrepancy at e=" + std::to_string(c.sample.e));
      }
    }
  }
  if (wants("global")) {
    try {
      const GlobalInvariants g = global_invariants(q, opt.s_max);
      Json j = to_json_invariants(g.report, g.report.point_degree == 1
                                                 ? f.field()
                                                 : Field::build(f.field().p(), g.report.point_degree));
      j["label"] = g.exact ? "exact" : "lower-bound";
      j["budget_exceeded"] = g.budget_exceeded;
      j["points_on_variety"] = g.points_on_variety;
      out.results["global"] = std::move(j);
      out.text.push_back("global: max dfpt " + std::to_string(g.report.dfpt) + " (" +
                         (g.exact ? "exact" : "lower bound") + ", " +
                         std::to_string(g.points_on_variety) + " points searched" +
                         (g.budget_exceeded ? ", budget exceeded" : "") + ")");
    } catch (const Error& e) {
      if (e.code() != Errc::PointNotOnVariety) throw;
      out.results["global"] = Json{{"error", e.what()}};
      out.text.push_back("global: no point of V(f) found");
    }
  }
  return out;
}

inline Json make_report(const Field& field, const Vars& vars, Json input, const Outcome& o) {
  Json results = o.results;
  if (!o.failures.empty()) results["failures"] = o.failures;
  return Json{{"version", kReportVersion},
              {"field", to_json_field(field)},
              {"vars", to_json_vars(vars)},
              {"input", std::move(input)},
              {"results", std::move(results)},
              {"status", o.failures.empty() ? "pass" : "counterexample"}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const Poly& select_poly(const ParsedInput& in, const std::optional<std::string>& name,
                               std::string& chosen) {
  if (in.polys.empty()) throw Error(Errc::SyntaxError, "input declares no polynomial");
  if (!name) {
    chosen = in.polys.front().first;
    return in.polys.front().second;
  }
  const Poly* p = in.find(*name);
  if (p == nullptr) throw Error(Errc::InvalidArgument, "no polynomial named '" + *name + "'");
  chosen = *name;
  return *p;
}

struct OutputOptions {
  bool json = false;
  bool text = false;
  std::string out_path;
};

inline void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  auto* j = cmd->add_flag("--json", o.json, "Emit the JSON report");
  auto* t = cmd->add_flag("--text", o.text, "Emit a plain-text summary (default)");
  j->excludes(t);
  cmd->add_option("--out", o.out_path, "Write the report to PATH instead of stdout");
}

inline void emit(const OutputOptions& o, const Json& report, const std::vector<std::string>& header,
                 const Outcome& outcome, std::ostream& out) {
  std::ostringstream body;
  if (o.json) {
    body << report.dump(2) << "\n";
  } else {
    for (const auto& l : header) body << l << "\n";
    for (const auto& l : outcome.text) body << l << "\n";
    body << "status: " << report.at("status").get<std::string>() << "\n";
  }
  if (o.out_path.empty()) {
    out << body.str();
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + o.out_path + "'");
  file << body.str();
}

inline int exit_for(const Json& report) {
  return report.at("status") == "pass" ? kPass : kCounterexample;
}

inline std::vector<std::string> header_lines(const Field& field, const Vars& vars,
                                             const std::string& label) {
  std::string names;
  for (const auto& n : vars.names()) names += (names.empty() ? "" : " ") + n;
  return {"field: " + field_name(field), "vars: " + names, label};
}

/// Entry point of the fsing tool. Exit codes: 0 pass, 1 counterexample,
/// 2 input error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"F-singularity checks for square-free supported polynomials", "fsing"};
  app.require_subcommand(1);
  OutputOptions output;

  std::string file;
  std::optional<std::string> poly_name;
  CheckOptions check;
  auto* cmd_check = app.add_subcommand("check", "Run the theorem checks on a polynomial");
  cmd_check->add_option("file", file, ".poly input")->required();
  cmd_check->add_option("--poly", poly_name, "Polynomial name (default: the first)");
  cmd_check->add_option("--point", check.point, "Point c1,...,cn for dfpt (default: origin)");
  cmd_check->add_option("--e-max", check.e_max, "Largest Frobenius exponent for certificates")
      ->check(CLI::Range(1u, 8u));
  cmd_check->add_option("--s-max", check.s_max, "Largest extension degree for point search")
      ->check(CLI::Range(1, kMaxExtensionDegree));
  cmd_check->add_option("--tests", check.tests, "Comma list of factor,fsplit,fregular,dfpt,fpt,global or all");
  cmd_check->add_option("--seed", check.seed, "Seed for randomized steps");
  add_output_flags(cmd_check, output);

  auto* cmd_factor = app.add_subcommand("factor", "Variable-disjoint factorization");
  cmd_factor->add_option("file", file, ".poly input")->required();
  cmd_factor->add_option("--poly", poly_name, "Polynomial name (default: the first)");
  cmd_factor->add_option("--seed", check.seed, "Seed for randomized steps");
  add_output_flags(cmd_factor, output);

  unsigned fpt_e_max = 3;
  auto* cmd_fpt = app.add_subcommand("fpt", "Splitting thresholds lambda(e) from f^(q-1) mod m^[q]");
  cmd_fpt->add_option("file", file, ".poly input")->required();
  cmd_fpt->add_option("--poly", poly_name, "Polynomial name (default: the first)");
  cmd_fpt->add_option("--e-max", fpt_e_max, "Largest Frobenius exponent")->check(CLI::Range(1u, 8u));
  add_output_flags(cmd_fpt, output);

  bool verify_matroid = false;
  std::uint32_t matroid_p = 2;
  auto* cmd_matroid = app.add_subcommand("matroid", "Checks on a matroid basis generating polynomial");
  cmd_matroid->add_option("file", file, ".matroid input")->required();
  cmd_matroid->add_flag("--verify-matroid", verify_matroid, "Check the basis exchange axiom");
  cmd_matroid->add_option("--p", matroid_p, "Characteristic (default 2)");
  cmd_matroid->add_option("--e-max", check.e_max, "Largest Frobenius exponent for certificates")
      ->check(CLI::Range(1u, 8u));
  add_output_flags(cmd_matroid, output);

  std::string g_name, h_name, ell;
  std::size_t mod_points = 20;
  auto* cmd_modify = app.add_subcommand("modify", "The g*l + h construction and its checks");
  cmd_modify->set_help_flag("--help", "Print this help message and exit");
  cmd_modify->add_option("file", file, ".poly input")->required();
  cmd_modify->add_option("--g", g_name, "Name of g")->required();
  cmd_modify->add_option("--h", h_name, "Name of h")->required();
  cmd_modify->add_option("--ell", ell, "Coefficients a1,...,an of l = 1 + sum a_i x_i")->required();
  cmd_modify->add_option("--e-max", check.e_max, "Largest Frobenius exponent for certificates")
      ->check(CLI::Range(1u, 8u));
  cmd_modify->add_option("--s-max", check.s_max, "Largest extension degree for point search")
      ->check(CLI::Range(1, kMaxExtensionDegree));
  cmd_modify->add_option("--points", mod_points, "Number of points of V(f) to check");
  add_output_flags(cmd_modify, output);

  SuiteConfig suite;
  std::string primes = "2,3,5";
  auto* cmd_suite = app.add_subcommand("suite", "Seeded random theorem checks");
  cmd_suite->add_option("--p", primes, "Comma list of primes");
  cmd_suite->add_option("--n", suite.n, "Largest number of variables")->check(CLI::Range(1, 16));
  cmd_suite->add_option("--terms", suite.max_terms, "Largest number of terms")->check(CLI::Range(1, 256));
  cmd_suite->add_option("--factors", suite.max_factors, "Largest number of factors")->check(CLI::Range(1, 16));
  cmd_suite->add_option("--count", suite.count, "Number of samples");
  cmd_suite->add_option("--seed", suite.seed, "Seed");
  cmd_suite->add_option("--e-max", suite.e_max, "Largest Frobenius exponent for certificates")
      ->check(CLI::Range(1u, 8u));
  cmd_suite->add_option("--s-max", suite.s_max, "Compare factor counts over F_{p^s}, s <= S")
      ->check(CLI::Range(1, kMaxExtensionDegree));
  cmd_suite->add_option("--threads", suite.threads, "Worker threads (0: all cores)");
  cmd_suite->add_flag("--timings", suite.timings, "Record per-sample wall time");
  add_output_flags(cmd_suite, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (cmd_check->parsed() || cmd_factor->parsed() || cmd_fpt->parsed()) {
      const ParsedInput in = parse_input(read_file(file));
      std::string chosen;
      const Poly& f = select_poly(in, poly_name, chosen);
      const Json input{{"file", file}, {"poly", chosen}, {"expr", format_poly(f)}};
      const auto header = header_lines(in.field, *in.vars, "input " + chosen + ": " + format_poly(f));
      Outcome outcome;
      if (cmd_check->parsed()) {
        outcome = run_checks(f, check);
      } else if (cmd_factor->parsed()) {
        CheckOptions opt;
        opt.tests = "factor";
        opt.seed = check.seed;
        outcome = run_checks(f, opt);
      } else {
        if (f.is_zero()) throw Error(Errc::ZeroInput, "input is zero");
        Json samples = Json::array();
        for (unsigned e = 1; e <= fpt_e_max; ++e) {
          const FptSample s = fpt_oracle(f, e);
          samples.push_back(to_json_fpt_sample(s));
          outcome.text.push_back("e=" + std::to_string(e) + " q=" + std::to_string(s.q) + ": " +
                                 (s.lambda ? "lambda " + rational_text(*s.lambda) : "not F-split"));
        }
        outcome.results["samples"] = std::move(samples);
      }
      const Json report = make_report(in.field, *in.vars, input, outcome);
      emit(output, report, header, outcome, out);
      return exit_for(report);
    }

    if (cmd_matroid->parsed()) {
      const MatroidInput m = parse_matroid(read_file(file));
      Json input{{"file", file}, {"n", m.n}, {"bases", m.bases.size()}};
      if (verify_matroid) {
        if (!verify_exchange_axiom(m)) {
          throw Error(Errc::InvalidMatroid, "bases violate the exchange axiom");
        }
        input["exchange_axiom"] = "verified";
      } else {
        input["exchange_axiom"] = "unchecked";
      }
      const Field field = Field::build(matroid_p, 1);
      const Poly f = matroid_basis_polynomial(m, field);
      input["expr"] = format_poly(f);
      CheckOptions opt;
      opt.tests = "factor,fsplit,fregular,dfpt,fpt";
      opt.e_max = check.e_max;
      const Outcome outcome = run_checks(f, opt);
      const Json report = make_report(field, f.vars(), input, outcome);
      emit(output, report, header_lines(field, f.vars(), "basis polynomial: " + format_poly(f)),
           outcome, out);
      return exit_for(report);
    }

    if (cmd_modify->parsed()) {
      const ParsedInput in = parse_input(read_file(file));
      const Poly& g = select_poly(in, g_name, g_name);
      const Poly& h = select_poly(in, h_name, h_name);
      const Point a = parse_point(ell, in.field, in.vars->size());
      const Modification m = modification_build(g, h, a, check.e_max);
      Outcome outcome;
      outcome.results["modification"] = to_json_modification(m);
      outcome.text.push_back("f = " + format_poly(m.f));
      outcome.text.push_back("homogenized (" + m.hom_var + "): " + format_poly(m.ftilde));
      outcome.text.push_back("in coordinates with " + m.new_coord + ": " + format_poly(m.transformed));
      if (m.certificate_check) {
        outcome.text.push_back("certificate: " + std::to_string(m.certificate.stages.size()) +
                               " stage(s), verified");
      } else {
        outcome.fail("certificate: " + m.certificate_check.reason);
      }
      outcome.text.push_back("dfpt at origin: " + std::to_string(m.dfpt_origin));
      const auto pts = modification_points(m, check.s_max, mod_points);
      Json jp = Json::array();
      std::size_t consistent = 0;
      for (const auto& r : pts) {
        jp.push_back(to_json_modification_point(r, in.field));
        consistent += r.consistent;
      }
      outcome.results["points"] = std::move(jp);
      outcome.text.push_back("points: " + std::to_string(consistent) + "/" + std::to_string(pts.size()) +
                             " consistent");
      if (consistent != pts.size()) outcome.fail("points: multiplicities disagree");
      const Json input{{"file", file}, {"g", g_name}, {"h", h_name}, {"ell", ell}};
      const Json report = make_report(in.field, *in.vars, input, outcome);
      emit(output, report, header_lines(in.field, *in.vars, "g = " + format_poly(g) + ", h = " + format_poly(h)),
           outcome, out);
      return exit_for(report);
    }

    if (cmd_suite->parsed()) {
      suite.primes.clear();
      for (const auto& s : split_list(primes)) {
        auto v = detail::parse_int(s);
        if (!v || *v < 2 || *v >= kMaxCharacteristic) {
          throw Error(Errc::NotPrime, "'" + s + "' is not a prime below 2^16");
        }
        suite.primes.push_back(static_cast<std::uint32_t>(*v));
      }
      const Json report = theorem_suite(suite);
      Outcome outcome;
      const auto& summary = report.at("results").at("summary");
      outcome.text.push_back("samples: " + summary.at("total").dump() + ", passed " +
                             summary.at("passed").dump() + ", skipped " + summary.at("skipped").dump() +
                             ", counterexamples " + summary.at("counterexamples").dump());
      for (const auto& rec : report.at("results").at("samples")) {
        if (rec.at("status") != "counterexample") continue;
        outcome.text.push_back("counterexample #" + rec.at("index").dump() + ": " +
                               rec.value("input", std::string("?")));
        if (rec.contains("reproducer")) {
          outcome.text.push_back("  reduced: " + rec.at("reproducer").get<std::string>());
        }
        for (const auto& why : rec.at("failures")) outcome.text.push_back("  " + why.get<std::string>());
      }
      emit(output, report, {"suite: seed " + std::to_string(suite.seed)}, outcome, out);
      return exit_for(report);
    }
  } catch (const ParseError& e) {
    err << "fsing: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "fsing: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fsing"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fsing::cli
