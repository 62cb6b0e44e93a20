// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "np/commutator.hpp"
#include "np/solve.hpp"
#include "reldb/expr.hpp"
#include "reldb/render.hpp"
#include "testdata.hpp"

using hy::DerivOp;
using hy::Fraction;
using hy::Polynomial;
using hy::reg;
using hy::test::V;

namespace {

const hy::Gauge& gauge() { return *hy::test::shipped().gauge("typeIII"); }

Fraction spec_value(const char* name) { return gauge().specialize(hy::test::shipped().rels.get(name).value); }

// Table entry atom -> value solved from each relation's left side.
hy::PfaffianTable table(std::initializer_list<const char*> names) {
  hy::PfaffianTable t;
  for (auto n : names) {
    const auto& r = hy::test::shipped().rels.get(n);
    t.insert(*r.lhs, hy::solve_for_atom(gauge().specialize(r.value), *r.lhs).value);
  }
  return t;
}

Polynomial atom(const char* text) { return hy::parse_expr(text); }

}  // namespace

TEST_CASE("gauge specialization") {
  Polynomial np6 = spec_value("NP6").num();
  Polynomial want = atom("D(gamma)") - V("alpha") * V("~pi") - V("beta") * V("pi") - V("Phi11");
  auto k = hy::proportional(np6, want);
  REQUIRE(k);
  CHECK(*k != 0);
  CHECK(spec_value("NP1").is_zero());

  const auto& s1 = hy::test::shipped().rels.get("5.140a").poly();
  CHECK(gauge().specialize(s1) == s1);
  CHECK(gauge().specialize(np6) == np6);
}

TEST_CASE("derivatives through a Pfaffian table") {
  auto t = table({"5.85"});
  CHECK(hy::apply_deriv(DerivOp::D, V("phi2").pow(2), t).is_zero());
  CHECK(hy::apply_deriv(DerivOp::delta, Polynomial(7), t).is_zero());

  auto t2 = table({"5.86", "5.87"});
  CHECK(t2.conjugation_closed());
  Fraction got = hy::apply_deriv(DerivOp::delta, V("phi2") * V("beta"), t2);
  Polynomial want = -(V("phi2") * V("beta") * (V("~alpha") + 3 * V("beta")));
  CHECK((got - Fraction(want)).is_zero());

  Fraction free = hy::apply_deriv(DerivOp::deltabar, V("beta"), hy::PfaffianTable{});
  CHECK(render(free) == "bd(beta)");
}

TEST_CASE("commutator residual of a constant") {
  const auto& rules = hy::test::shipped().rules;
  CHECK(rules.size() >= 4);
  CHECK(hy::commutator_residual(DerivOp::deltabar, DerivOp::delta, Fraction(1), hy::PfaffianTable{}, rules).is_zero());
}

TEST_CASE("solve for an atom") {
  auto s = hy::solve_for_atom(spec_value("5.97"), reg().intern("D(lambda)"));
  Polynomial want = atom("bd(pi)") + V("pi").pow(2) + V("pi") * V("alpha") - V("pi") * V("~beta");
  CHECK((s.value - Fraction(want)).is_zero());
  CHECK(!s.nonzero);

  auto t = hy::solve_for_atom(V("sx") + V("sa"), reg().intern("sx"));
  CHECK((t.value + Fraction(V("sa"))).is_zero());
  CHECK_THROWS(hy::solve_for_atom(V("sx") * V("sx") + 1, reg().intern("sx")));
}

TEST_CASE("eliminate atoms") {
  Polynomial xy = hy::eliminate_atom(V("ex") + V("eu"), V("ey") + V("eu"), {reg().intern("eu")});
  CHECK(abs(hy::proportional(xy, V("ex") - V("ey")).value_or(0)) == 1);

  Polynomial e = hy::eliminate_atom(spec_value("5.95.corr").num(), spec_value("5.96").num(),
                                    {reg().intern("d(~alpha)"), reg().intern("d(~pi)")});
  Polynomial want = hy::factor_out(spec_value("5.98a").cancelled().num()).primitive;
  auto k = hy::proportional(e, want);
  REQUIRE(k);
  CHECK(*k != 0);
}

TEST_CASE("appendix relations") {
  hy::Database db;
  hy::load_file(db, hy::test::data("np_field_equations.rel"));
  CHECK(db.rels.size() == 29);
  CHECK(db.rels.with_conjugates().size() == 58);
  CHECK(db.rels.get("NP6").provenance == hy::Provenance::Appendix);
  CHECK(db.rels.find("~NP6") != nullptr);
}
