/*
   Copyright 2026 cmdefect contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cmdefect/parser.hpp"
#include "cmdefect/session.hpp"

using namespace cmdefect;
using nlohmann::json;

namespace {

std::pair<int, std::vector<json>> run_json(const std::string& text, unsigned threads = 1) {
  Session s = parse_session(text);
  ExecutionOptions opt;
  opt.json = true;
  opt.threads = threads;
  std::ostringstream out;
  int code = execute_session(s, opt, out);
  std::vector<json> docs;
  std::istringstream in(out.str());
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) docs.push_back(json::parse(line));
  return {code, docs};
}

const char* kDepthJumpSession =
    "ring Q[X,Y,Z] grevlex\n"
    "ideal Z1 = Z\n"
    "ideal m = X, Y, Z\n"
    "compute m2 = power m 2\n"
    "compute I = intersect Z1 m2\n"
    "compute A = quotient I\n"
    "invariants A\n";

}  // namespace

TEST_CASE("parse_session: node structure and check nodes") {
  Session s = parse_session(
      "ring Q[X,Y,Z] grevlex\n"
      "ideal J = X*Z, Y*Z, Z^2\n"
      "compute A = quotient J\n"
      "invariants A\n");
  CHECK(s.commands.size() == 4);
  CHECK(s.commands[0].kind == CommandKind::declare_ring);
  CHECK(s.commands[1].kind == CommandKind::declare_ideal);
  CHECK(s.commands[1].polys.size() == 3);
  CHECK(s.commands[2].kind == CommandKind::compute);
  CHECK(s.commands[3].kind == CommandKind::invariants);

  Session c = parse_session(
      "ring Q[x]\n"
      "ideal I = x^2\n"
      "compute A = quotient I\n"
      "check Cnl n=2 l=1 on A\n");
  const auto& chk = c.commands.back();
  CHECK(chk.kind == CommandKind::check);
  CHECK(chk.query.kind == PropertyKind::Cnl);
  CHECK(chk.query.n == 2);
  CHECK(chk.query.l == 1);
  CHECK(chk.name == "A");
}

TEST_CASE("parse_session: diagnostics") {
  CHECK_THROWS_WITH_AS(parse_session("ring Q[x] foo\n"),
                       doctest::Contains("unsupported order \"foo\""), ParseError);
  CHECK_THROWS_AS(parse_session("ideal J = x\n"), ParseError);                // no ring yet
  CHECK_THROWS_AS(parse_session("ring Q[x]\nideal J = y\n"), ParseError);     // unknown variable
  CHECK_THROWS_AS(parse_session("ring Q[x]\ncheck Sn n=1 on A\n"), ParseError);  // undeclared
  CHECK_THROWS_AS(parse_session("ring Q[x]\nideal J = x\nideal J = x^2\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring Q[x]\nring Q[y]\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring F6[x]\nideal J = x\n"), ParseError);    // 6 is not prime
  CHECK_THROWS_AS(parse_session("ring Q[x]\ncheck Cnl n=2 on x\n"), ParseError);  // missing l
  try {
    parse_session("ring Q[x]\nideal J = x +\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("execute: depth-jump session emits the expected invariants JSON") {
  auto [code, docs] = run_json(kDepthJumpSession);
  CHECK(code == kExitOk);
  REQUIRE_FALSE(docs.empty());
  const json& inv = docs.back();
  CHECK(inv["command"] == "invariants");
  CHECK(inv["dim"] == 2);
  CHECK(inv["depth"] == 0);
  CHECK(inv["cmd"] == 2);
  CHECK(inv["almost_cm"] == false);
}

TEST_CASE("execute: prescribed-defect check emits witness (X0,X1,X2,T1)") {
  const char* text =
      "ring Q[X0,X1,X2,T1] grevlex\n"
      "ideal X0I = X0\n"
      "ideal mX = X0, X1, X2\n"
      "compute m3 = power mX 3\n"
      "compute I = intersect X0I m3\n"
      "compute A = quotient I\n"
      "check Cnl n=3 l=1 on A\n";
  auto [code, docs] = run_json(text);
  CHECK(code == kExitOk);
  const json& chk = docs.back();
  CHECK(chk["command"] == "check");
  CHECK(chk["answer"] == "no");
  CHECK(chk["witness"] == "(X0,X1,X2,T1)");
  CHECK(chk["profile"]["dim"] == 3);
  CHECK(chk["profile"]["depth"] == 1);
}

TEST_CASE("execute: corpus verify summary") {
  auto [code, docs] = run_json("ring Q[x]\ncorpus seed=42 vars=3 count=6 verify\n");
  CHECK(code == kExitOk);
  const json& summary = docs.back();
  CHECK(summary["command"] == "corpus");
  CHECK(summary["statements"] == 9);
  CHECK(summary["counterexamples"] == 0);
}

TEST_CASE("exit codes honor --expect") {
  const char* base =
      "ring Q[x,y,z]\n"
      "ideal J = x*y, x*z\n"
      "compute M = quotient J\n";
  {
    auto [code, docs] = run_json(std::string(base) + "check Sn n=1 on M --expect yes\n");
    CHECK(code == kExitOk);
  }
  {
    auto [code, docs] = run_json(std::string(base) + "check Sn n=2 on M --expect yes\n");
    CHECK(code == kExitExpectationFailed);
    CHECK(docs.back()["answer"] == "no");
    CHECK(docs.back()["expected"] == "yes");
  }
  {
    auto [code, docs] = run_json(std::string(base) + "check Sn n=2 on M --expect no\n");
    CHECK(code == kExitOk);
  }
  {
    // engine error: quotient of a non-homogeneous ideal
    auto [code, docs] =
        run_json("ring Q[x,y]\nideal J = x + x*y\ncompute M = quotient J\ninvariants M\n");
    CHECK(code == kExitEngineError);
    CHECK(docs.back()["command"] == "error");
  }
}

TEST_CASE("module declaration via coker matrix") {
  const char* text =
      "ring Q[x,y,z]\n"
      "module M = coker [[x, y, 0], [0, x, z]]\n"
      "invariants M\n"
      "check acm on M\n";
  auto [code, docs] = run_json(text);
  CHECK(code == kExitOk);
  CHECK(docs[1]["rows"] == 2);
  CHECK(docs[1]["cols"] == 3);
  CHECK(docs[2]["command"] == "invariants");
  CHECK(docs[3]["command"] == "check");
  CHECK(docs[3]["property"] == "acm");
}

TEST_CASE("profile command lists all 2^m primes in canonical order") {
  auto [code, docs] = run_json(
      "ring Q[x,y]\n"
      "ideal J = x*y\n"
      "compute M = quotient J\n"
      "profile M\n");
  CHECK(code == kExitOk);
  const json& prof = docs.back();
  REQUIRE(prof["rows"].size() == 4);
  CHECK(prof["rows"][0]["prime"] == "(0)");
  CHECK(prof["rows"][3]["prime"] == "(x,y)");
  CHECK(prof["rows"][0]["in_support"] == false);
  CHECK(prof["rows"][0]["depth"] == "+inf");  // infinities are JSON strings
  CHECK(prof["rows"][3]["dim"] == 1);
  CHECK(prof["rows"][3]["cmd"] == 0);  // a hypersurface is Cohen-Macaulay
}

TEST_CASE("JSON numeric fields round-trip exactly") {
  auto [code, docs] = run_json(kDepthJumpSession);
  REQUIRE(code == kExitOk);
  for (const auto& d : docs) {
    auto re = json::parse(d.dump());
    CHECK(re == d);
  }
}

TEST_CASE("--threads changes wall clock only, never bytes") {
  const std::string text = "ring Q[x]\ncorpus seed=9 vars=3 count=5 verify\n";
  Session s1 = parse_session(text);
  ExecutionOptions o1{true, 1}, o4{true, 4};
  std::ostringstream a, b;
  execute_session(s1, o1, a);
  execute_session(s1, o4, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("prime-field session") {
  auto [code, docs] = run_json(
      "ring F2[x,y]\n"
      "ideal J = x^2 + y^2\n"  // over F2 this is (x+y)^2
      "compute M = quotient J\n"
      "invariants M\n");
  CHECK(code == kExitOk);
  CHECK(docs.back()["dim"] == 1);
  CHECK(docs.back()["cmd"] == 0);
}

TEST_CASE("invariants and check accept an ideal name as the cyclic quotient") {
  auto [code, docs] = run_json(
      "ring Q[x,y,z]\n"
      "ideal J = x*y, x*z\n"
      "invariants J\n"
      "check acm on J\n");
  CHECK(code == kExitOk);
  CHECK(docs[2]["dim"] == 2);
  CHECK(docs[2]["depth"] == 1);
  CHECK(docs[2]["cmd"] == 1);
  CHECK(docs[3]["answer"] == "yes");
}

TEST_CASE("spec-scale corpus run through the CLI surface") {
  auto [code, docs] = run_json("ring Q[x]\ncorpus seed=42 vars=4 count=100 verify\n", 4);
  CHECK(code == kExitOk);
  CHECK(docs.back()["statements"] == 9);
  CHECK(docs.back()["counterexamples"] == 0);
  CHECK(docs.back()["reports"].size() == 9);
}

TEST_CASE("negative query parameters are rejected at parse time") {
  CHECK_THROWS_AS(parse_session("ring Q[x]\nideal J = x\ncheck Sn n=-1 on J\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring Q[x]\nideal J = x\ncompute P = power J 0\n"), ParseError);
}
