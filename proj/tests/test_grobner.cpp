// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "doctest.h"
#include "grobner/solve.hpp"
#include "reldb/render.hpp"
#include "testdata.hpp"

using hy::MonomialOrder;
using hy::Polynomial;
using hy::reg;
using hy::test::V;

namespace {

std::vector<hy::SymId> rk(std::initializer_list<const char*> names) {
  std::vector<hy::SymId> r;
  for (auto n : names) r.push_back(reg().intern(n));
  return r;
}

std::set<std::string> rendered(const std::vector<hy::TriangularSystem>& ss) {
  std::set<std::string> out;
  for (auto& s : ss) out.insert(hy::render(hy::GroebnerBasis{s.gens, s.order, true, {}}));
  return out;
}

}  // namespace

TEST_CASE("normal form") {
  Polynomial x = V("x");
  auto lex = MonomialOrder::lex(rk({"x"}));
  CHECK(hy::normal_form(x * x, {x - 1}, lex) == 1);
  CHECK(hy::normal_form(x * x + 3, {}, lex) == x * x + 3);
  CHECK(hy::normal_form(x - 1, {x - 1}, lex).is_zero());
}

TEST_CASE("buchberger") {
  Polynomial x = V("x"), y = V("y");
  auto lex = MonomialOrder::lex(rk({"x", "y"}));
  auto G = hy::buchberger({x - 1, x * x - y}, lex);
  CHECK(hy::render(G) == "x - 1; y - 1");
  CHECK(hy::is_groebner(G.gens, lex));

  CHECK(hy::render(hy::buchberger({x, y}, lex)) == "x; y");
  auto U = hy::buchberger({x * x - y, x + y * y, 1}, lex);
  CHECK(U.is_unit());
  CHECK(hy::render(U) == "1");
}

TEST_CASE("resource caps raise instead of answering") {
  Polynomial x = V("x"), y = V("y"), z = V("z");
  hy::GbConfig cfg;
  cfg.max_pairs = 1;
  auto o = MonomialOrder::grevlex(rk({"x", "y", "z"}));
  CHECK_THROWS_AS(hy::buchberger({x * x * y - z, x * y * y - x, z * z - y * x, x * z - 1}, o, cfg), hy::ResourceError);
}

TEST_CASE("saturation") {
  Polynomial x = V("x"), y = V("y");
  auto o = MonomialOrder::grevlex(rk({"x", "y"}));
  CHECK(hy::saturate({x * y}, x, o).gens == std::vector<Polynomial>{y});
  CHECK(hy::saturate({x}, y, o).gens == std::vector<Polynomial>{x});
  CHECK(hy::saturate({x * x}, x, o).is_unit());
}

TEST_CASE("triviality and radical membership") {
  Polynomial x = V("x"), y = V("y");
  auto o = MonomialOrder::grevlex(rk({"x", "y"}));
  CHECK(hy::is_trivial({1}, o));
  CHECK(!hy::is_trivial({x}, o));
  CHECK(hy::radical_membership(x, {x * x}));
  CHECK(!hy::radical_membership(y, {x}));
}

TEST_CASE("gsolve splits univariate factors") {
  Polynomial x = V("x"), y = V("y");
  hy::GsolveOptions opt;
  opt.ranking = rk({"x"});
  CHECK(rendered(hy::gsolve({x * x - 1}, {}, opt)) == std::set<std::string>{"x - 1", "x + 1"});
  opt.ranking = rk({"x", "y"});
  CHECK(rendered(hy::gsolve({x * x - y * y, x + y}, {}, opt)) == std::set<std::string>{"x + y"});
}

TEST_CASE("conjugation filter") {
  Polynomial x = V("fx"), cx = V("~fx");
  hy::GsolveOptions opt;
  opt.ranking = rk({"~fx", "fx"});
  auto dropped = hy::conjugation_filter(hy::gsolve({x * x + 1, cx - x}, {}, opt));
  for (auto& r : dropped) CHECK(r.status == hy::FilterStatus::Dropped);

  auto kept = hy::conjugation_filter(hy::gsolve({x - 2, cx - 2}, {}, opt));
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].status == hy::FilterStatus::Kept);

  Polynomial x1 = V("x1"), x2 = V("x2"), c1 = V("~x1"), c2 = V("~x2");
  opt.ranking = rk({"~x2", "~x1", "x2", "x1"});
  auto main = hy::conjugation_filter(hy::gsolve({6 * x1 + 11, 6 * c1 + 11, 324 * x2 * c2 - 1}, {}, opt));
  REQUIRE(main.size() == 1);
  CHECK(main[0].status == hy::FilterStatus::Kept);
  CHECK(!hy::forces_zero(main[0], reg().intern("x2")));
}

TEST_CASE("conjugation filter on positive-dimensional systems") {
  Polynomial x = V("fx"), cx = V("~fx");
  hy::GsolveOptions opt;
  opt.ranking = rk({"~fx", "fx"});
  auto cube = hy::conjugation_filter(hy::gsolve({x * x * x * cx * cx * cx - 2}, {}, opt));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].status == hy::FilterStatus::Kept);
  CHECK(cube[0].note.find("slice fx = ~fx") != std::string::npos);
  CHECK(!hy::forces_zero(cube[0], reg().intern("fx")));

  auto none = hy::conjugation_filter(hy::gsolve({x * x * cx * cx + 1}, {}, opt));
  for (auto& r : none) CHECK(r.status != hy::FilterStatus::Kept);
}

TEST_CASE("rendered basis") {
  Polynomial x1 = V("x1"), x2 = V("x2"), c1 = V("~x1"), c2 = V("~x2");
  auto lex = MonomialOrder::lex(rk({"~x2", "~x1", "x2", "x1"}));
  auto G = hy::buchberger({6 * x1 + 11, 6 * c1 + 11, 324 * x2 * c2 - 1}, lex);
  CHECK(hy::render(G) == "324*x2*~x2 - 1; 6*x1 + 11; 6*~x1 + 11");
}
