// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include <map>

#include "doctest.h"
#include "reldb/expr.hpp"
#include "reldb/render.hpp"
#include "testdata.hpp"

using hy::Polynomial;
using hy::Rational;
using hy::reg;
using hy::test::V;

TEST_CASE("ring operations") {
  Polynomial x = V("x");
  CHECK((x + 1) * (x - 1) == x * x - 1);
  CHECK(render((x + 1) * (x - 1)) == "x^2 - 1");
  CHECK((x + 1).pow(3) == x * x * x + 3 * x * x + 3 * x + 1);
  CHECK((x - x).is_zero());
  Polynomial p = (Polynomial(361) + 190 * V("x1")) * V("pi") * V("~pi");
  CHECK(p.size() == 2);
}

TEST_CASE("conjugation") {
  CHECK(V("x1").conjugate() == V("~x1"));
  CHECK(V("~alpha").conjugate() == V("alpha"));
  CHECK(Polynomial::var(reg().intern("d(alpha)")).conjugate() == Polynomial::var(reg().intern("bd(~alpha)")));

  const auto& s2 = hy::test::shipped().rels.get("5.141a").poly();
  Polynomial c = s2.conjugate();
  auto x1 = reg().intern("x1"), cx1 = reg().intern("~x1");
  CHECK(c.coeff(cx1, 2).coeff(x1, 1).constant_term() == Rational(-1663092));
  CHECK(s2.coeff(x1, 2).coeff(cx1, 1).constant_term() == Rational(-1663092));
  CHECK(c.conjugate() == s2);
}

TEST_CASE("substitution") {
  const auto& db = hy::test::shipped();
  std::map<hy::SymId, Polynomial> m{{reg().intern("alpha"), V("x1") * V("pi")},
                                    {reg().intern("~alpha"), V("~x1") * V("~pi")},
                                    {reg().intern("beta"), V("x2") * V("~pi")},
                                    {reg().intern("~beta"), V("~x2") * V("pi")}};
  Polynomial s1 = db.rels.get("5.108").poly().substitute(m);
  CHECK(s1 == V("pi") * V("~pi") * db.rels.get("5.140a").poly());

  Polynomial x = V("x");
  CHECK(x.substitute({{reg().intern("x"), x}}) == x);

  Polynomial s2 = db.rels.get("5.136").poly().substitute(m);
  Polynomial target = V("pi").pow(4) * V("~pi") * db.rels.get("5.141a").poly();
  auto c = hy::proportional(s2, target);
  REQUIRE(c);
  CHECK(*c != 0);
}

TEST_CASE("factor_out") {
  Polynomial x = V("x"), y = V("y");
  auto f = hy::factor_out(6 * x * x * y + 9 * x * y);
  CHECK(f.content == 3);
  CHECK(Polynomial::monomial(f.mono, 1) == x * y);
  CHECK(f.primitive == 2 * x + 3);

  auto g = hy::factor_out(-4 * x);
  CHECK(g.content == -4);
  CHECK(g.primitive == 1);
  CHECK(Polynomial::monomial(g.mono, 1) == x);

  const auto& s1 = hy::test::shipped().rels.get("5.140a").poly();
  auto h = hy::factor_out(V("pi") * V("~pi") * s1);
  CHECK(Polynomial::monomial(h.mono, 1) == V("pi") * V("~pi"));
  CHECK(h.primitive == s1);
}

TEST_CASE("exact division and proportionality") {
  Polynomial x = V("x"), y = V("y");
  CHECK((x * x - y * y).divide_exact(x + y) == x - y);
  CHECK(!(x * x + 1).divide_exact(x + 1));
  CHECK(hy::proportional(2 * x + 4, x + 2) == Rational(2));
  CHECK(!hy::proportional(x + 1, x + 2));
}
