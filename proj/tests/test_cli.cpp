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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fsing/cli.hpp"

namespace fsing {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FSING_DATA_DIR) + "/" + name; }

TEST(Cli, CheckQuadricJson) {
  const auto r = run({"check", data("quadric.poly"), "--poly", "f", "--tests", "fsplit,fregular,dfpt", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_EQ(j.at("field"), (Json{{"p", 2}, {"s", 1}}));
  EXPECT_EQ(j.at("vars"), Json::array({"x", "y", "z", "w"}));
  EXPECT_EQ(j.at("results").at("fsplit").at("witness"), "x*y");
  EXPECT_EQ(j.at("results").at("fregular").at("check").at("ok"), true);
  EXPECT_EQ(j.at("results").at("dfpt").at("dfpt"), 1);
  EXPECT_EQ(j.at("results").at("dfpt").at("fpt"), (Json{{"num", 2}, {"den", 1}}));
  EXPECT_FALSE(j.at("results").contains("global"));
}

TEST(Cli, CheckAllTestsText) {
  const auto r = run({"check", data("quadric.poly")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fsplit: split at e=1, witness x*y"), std::string::npos);
  EXPECT_NE(r.out.find("global: max dfpt 1 (exact"), std::string::npos);
  EXPECT_NE(r.out.find("status: pass"), std::string::npos);
}

TEST(Cli, CertificateFromReportReverifies) {
  const auto r = run({"check", data("quadric.poly"), "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const auto in = parse_input(cli::read_file(data("quadric.poly")));
  const CIdeal q = disjoint_factorization(*in.find("f"));
  const auto cert = certificate_from_json(j.at("results").at("fregular").at("certificate"), in.field, in.vars);
  EXPECT_TRUE(verify_regularity_certificate(q, cert));
}

TEST(Cli, CheckAtPoint) {
  const auto r = run({"check", data("quadric.poly"), "--tests", "dfpt", "--point", "1,0,0,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("results").at("dfpt").at("dfpt"), 0);
  EXPECT_EQ(run({"check", data("quadric.poly"), "--tests", "dfpt", "--point", "1,1,0,0"}).code, 2);
  EXPECT_EQ(run({"check", data("quadric.poly"), "--tests", "dfpt", "--point", "1,1"}).code, 2);
}

TEST(Cli, FactorListsFactors) {
  const auto r = run({"factor", data("product.poly"), "--poly", "f"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("factor: 2 factor(s)"), std::string::npos);
  EXPECT_NE(r.out.find("  x + y\n"), std::string::npos);
  EXPECT_NE(r.out.find("  z + w\n"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  auto r = run({"check", data("bad.poly")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("BadFieldSpec"), std::string::npos);
  r = run({"check", data("square.poly")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotSquareFreeSupported"), std::string::npos);
  EXPECT_EQ(run({"check", data("missing.poly")}).code, 2);
  EXPECT_EQ(run({"check", data("quadric.poly"), "--poly", "g"}).code, 2);
  EXPECT_EQ(run({"check", data("quadric.poly"), "--tests", "bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", data("quadric.poly"), "--json", "--text"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check"), std::string::npos);
}

TEST(Cli, FptReportsNotSplit) {
  const auto r = run({"fpt", data("square.poly"), "--e-max", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("results").at("samples")[0].at("split"), false);
  const auto t = run({"fpt", data("quadric.poly"), "--e-max", "2"});
  EXPECT_NE(t.out.find("e=2 q=4: lambda 2"), std::string::npos);
}

TEST(Cli, Matroid) {
  auto r = run({"matroid", data("triangle.matroid"), "--verify-matroid", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("input").at("expr"), "x1*x2 + x1*x3 + x2*x3");
  EXPECT_EQ(j.at("input").at("exchange_axiom"), "verified");
  EXPECT_EQ(j.at("results").at("dfpt").at("dfpt"), 1);
  r = run({"matroid", data("u24.matroid"), "--p", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j.at("input").at("exchange_axiom"), "unchecked");
  EXPECT_EQ(j.at("field").at("p"), 3);
}

TEST(Cli, MatroidExchangeFailure) {
  const auto path = std::filesystem::temp_directory_path() / "fsing_bad.matroid";
  std::ofstream(path) << "matroid\nn 4\nbasis 1 2\nbasis 3 4\n";
  EXPECT_EQ(run({"matroid", path.string()}).code, 0);
  EXPECT_EQ(run({"matroid", path.string(), "--verify-matroid"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, Modify) {
  auto r = run({"modify", data("modify.poly"), "--g", "g", "--h", "h", "--ell", "1,0,0,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("results").at("modification").at("transformed"), "x*z*w + x*y*y0 + z*w*y0");
  EXPECT_EQ(j.at("results").at("points").size(), 20u);
  r = run({"modify", data("modify.poly"), "--g", "h", "--h", "g", "--ell", "0,0,0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("HypothesisViolated"), std::string::npos);
}

TEST(Cli, SuiteIsDeterministic) {
  const std::vector<std::string> args{"suite", "--p", "2,3", "--n", "5", "--terms", "6", "--factors", "2",
                                      "--count", "12", "--seed", "4", "--json"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(Json::parse(a.out).at("status"), "pass");
  EXPECT_EQ(run(args).out, a.out);
  EXPECT_EQ(run({"suite", "--p", "4"}).code, 2);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "fsing_report.json";
  const auto r = run({"check", data("quadric.poly"), "--tests", "dfpt", "--json", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(Json::parse(s.str()).at("status"), "pass");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fsing
