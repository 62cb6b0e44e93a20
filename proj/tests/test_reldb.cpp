// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "reldb/expr.hpp"
#include "reldb/polyfile.hpp"
#include "reldb/render.hpp"
#include "testdata.hpp"

using hy::Polynomial;
using hy::reg;
using hy::test::V;

TEST_CASE("parse expressions") {
  Polynomial s1 = hy::parse_expr("361 + 190*x1 + 190*~x1 + 100*x1*~x1 - 144*x2*~x2");
  CHECK(s1 == hy::test::shipped().rels.get("5.140a").poly());

  Polynomial a = hy::parse_expr("D(phi2)");
  REQUIRE(a.size() == 1);
  auto vars = a.variables();
  REQUIRE(vars.size() == 1);
  auto sym = reg().get(vars[0]);
  CHECK(sym.kind == hy::SymbolKind::DerivAtom);
  CHECK(sym.op == hy::DerivOp::D);
  CHECK(sym.base == reg().intern("phi2"));

  CHECK(hy::parse_expr("(x + 1)^2 - x^2 - 2*x") == 1);
  CHECK(hy::parse_expr("010*x - 8*x") == 2 * V("x"));
  CHECK(hy::parse_expr("~alpha*~beta") == (V("alpha") * V("beta")).conjugate());
}

TEST_CASE("parse errors carry line and column") {
  try {
    hy::parse_expr("x + * 2");
    FAIL("no error");
  } catch (const hy::ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
  }
  CHECK_THROWS_AS(hy::parse_expr("x / (y + 1)"), hy::ParseError);
  CHECK_THROWS_AS(hy::parse_expr("foo(x)"), hy::ParseError);
  CHECK_THROWS_AS(hy::parse_expr("(x + 1"), hy::ParseError);
}

TEST_CASE("malformed input never crashes the parser") {
  std::mt19937 rng(7);
  const std::string alphabet = "xy~()*+-^/0123456789 D[]bd.";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    int n = std::uniform_int_distribution<int>(0, 16)(rng);
    for (int k = 0; k < n; ++k) s += alphabet[std::uniform_int_distribution<size_t>(0, alphabet.size() - 1)(rng)];
    try {
      hy::parse_fraction(s);
    } catch (const hy::ParseError&) {
    } catch (const hy::AlgebraError&) {
    }
  }
}

TEST_CASE("relation files") {
  hy::Database empty;
  hy::load_text(empty, "", "empty.rel");
  CHECK(empty.rels.size() == 0);

  hy::Database dup;
  const std::string text =
      "rel NP6 appendix: D(gamma) = Phi11   # ref: a\n"
      "rel NP6 appendix: D(gamma) = 0   # ref: b\n";
  CHECK_THROWS(hy::load_text(dup, text, "dup.rel"));

  hy::Database bad;
  try {
    hy::load_text(bad, "rel A paper: alpha = 1   # ref: a\nrel B paper: alpha = (1 +   # ref: b\n", "bad.rel");
    FAIL("no error");
  } catch (const hy::SourceError& e) {
    CHECK(e.file == "bad.rel");
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }

  std::vector<hy::LintIssue> lint;
  hy::Database l;
  hy::load_text(l, "rel A paper: alpha = 1\n", "lint.rel", &lint);
  REQUIRE(lint.size() == 1);
  CHECK(lint[0].line == 1);
}

TEST_CASE("render") {
  Polynomial x = V("x");
  CHECK(hy::render(x * x - 1) == "x^2 - 1");
  CHECK(hy::render(Polynomial(0)) == "0");
  CHECK(hy::render(hy::parse_expr("-3/2*x*~y + 1/3")) == "-3/2*x*~y + 1/3");
}

TEST_CASE("shipped relations round trip through render") {
  const auto& db = hy::test::shipped();
  auto all = db.rels.with_conjugates();
  CHECK(all.size() > 100);
  for (const auto& name : all.names()) {
    const auto& r = all.get(name);
    std::string s = hy::render(r.value);
    hy::Fraction back = hy::parse_fraction(s);
    INFO(name << ": " << s);
    CHECK((back - r.value).is_zero());
    CHECK(hy::render(back) == s);
  }
}

TEST_CASE("polynomial system files") {
  auto sys = hy::load_poly_system(hy::test::data("main_system.poly"));
  CHECK(sys.gens.size() == 5);
  CHECK(sys.ranking == std::vector<std::string>{"~x2", "~x1", "x2", "x1"});
  CHECK(sys.gens[0] == hy::test::shipped().rels.get("5.140a").poly());

  auto inl = hy::parse_poly_system("var u v\nu^2 - v\nu = 1\n", "inline.poly");
  REQUIRE(inl.gens.size() == 2);
  CHECK(inl.gens[1] == V("u") - 1);
  CHECK_THROWS_AS(hy::parse_poly_system("u^2 - \n", "bad.poly"), hy::ParseError);
}
