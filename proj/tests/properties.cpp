// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "properties.hpp"

#include <algorithm>
#include <random>

#include "grobner/gb.hpp"
#include "np/pfaffian.hpp"
#include "reldb/expr.hpp"
#include "reldb/render.hpp"

namespace hy::props {
namespace {

struct Gen {
  std::mt19937 rng;
  explicit Gen(uint32_t seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational coeff(bool fractions = true) {
    int n = 0;
    while (n == 0) n = pick(-9, 9);
    Rational c(n, fractions && pick(0, 3) == 0 ? pick(1, 7) : 1);
    c.canonicalize();
    return c;
  }

  Polynomial poly(const std::vector<SymId>& vars, int max_terms, int max_deg, bool fractions = true) {
    std::vector<Term> ts;
    int n = pick(1, max_terms);
    for (int i = 0; i < n; ++i) {
      std::vector<Monomial::Entry> e;
      int budget = pick(0, max_deg);
      for (SymId v : vars) {
        if (budget == 0) break;
        int k = pick(0, budget);
        if (k) e.push_back({v, uint32_t(k)});
        budget -= k;
      }
      std::sort(e.begin(), e.end());
      ts.push_back({Monomial::from_entries(e), coeff(fractions)});
    }
    return Polynomial::from_terms(ts);
  }
};

std::vector<SymId> np_vars() {
  std::vector<SymId> v;
  for (const char* n : {"alpha", "~alpha", "beta", "~beta", "pi", "~pi", "phi2", "~phi2"}) v.push_back(reg().intern(n));
  return v;
}

std::vector<SymId> small_vars() {
  return {reg().intern("pu"), reg().intern("pv"), reg().intern("pw")};
}

void fail(Result& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

template <class Body>
Result run(const char* name, int cases, Body&& body) {
  Result r{name, cases, 0, ""};
  for (int i = 0; i < cases; ++i) {
    try {
      body(r, i);
    } catch (const std::exception& e) {
      fail(r, std::string("case ") + std::to_string(i) + ": " + e.what());
    }
  }
  return r;
}

}  // namespace

Result ring_axioms(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = np_vars();
  return run("ring axioms", cases, [&](Result& r, int i) {
    Polynomial a = g.poly(vars, 5, 3), b = g.poly(vars, 5, 3), c = g.poly(vars, 4, 2);
    bool ok = (a + b) == (b + a) && (a * b) == (b * a) && ((a + b) + c) == (a + (b + c)) &&
              ((a * b) * c) == (a * (b * c)) && (a * (b + c)) == (a * b + a * c) && (a - a).is_zero() &&
              (a + Polynomial(0)) == a && (a * Polynomial(1)) == a && (a * Polynomial(0)).is_zero() &&
              (a - b) == (a + (-b)) && a.pow(2) == a * a;
    if (!ok) fail(r, "case " + std::to_string(i) + ": a = " + render(a) + ", b = " + render(b));
  });
}

Result conjugation(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = np_vars();
  return run("conjugation automorphism", cases, [&](Result& r, int i) {
    Polynomial a = g.poly(vars, 5, 3), b = g.poly(vars, 5, 3);
    bool ok = a.conjugate().conjugate() == a && (a * b).conjugate() == a.conjugate() * b.conjugate() &&
              (a + b).conjugate() == a.conjugate() + b.conjugate() &&
              (a * a.conjugate()).conjugate() == a * a.conjugate();
    if (!ok) fail(r, "case " + std::to_string(i) + ": a = " + render(a));
  });
}

Result leibniz(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = np_vars();
  const DerivOp ops[] = {DerivOp::D, DerivOp::Delta, DerivOp::delta, DerivOp::deltabar};
  return run("Leibniz law", cases, [&](Result& r, int i) {
    PfaffianTable t;
    for (int k = 0; k < 3; ++k) {
      SymId atom = reg().deriv(ops[g.pick(0, 3)], vars[g.pick(0, int(vars.size()) - 1)]);
      if (!t.contains(atom)) t.insert(atom, Fraction(g.poly(vars, 3, 2)));
    }
    DerivOp op = ops[g.pick(0, 3)];
    Polynomial f = g.poly(vars, 4, 3), h = g.poly(vars, 4, 3);
    Fraction lhs = apply_deriv(op, f * h, t);
    Fraction rhs = Fraction(f) * apply_deriv(op, h, t) + Fraction(h) * apply_deriv(op, f, t);
    bool ok = (lhs - rhs).is_zero() && t.conjugation_closed();
    Fraction c1 = apply_deriv(op, f, t).conjugate();
    Fraction c2 = apply_deriv(conj_op(op), f.conjugate(), t);
    ok = ok && (c1 - c2).is_zero();
    if (!ok) fail(r, "case " + std::to_string(i) + ": f = " + render(f) + ", h = " + render(h));
  });
}

Result spoly_reduction(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = small_vars();
  return run("S-polynomials reduce to zero", cases, [&](Result& r, int i) {
    std::vector<Polynomial> gens;
    bool lex = g.pick(0, 1);
    auto o = lex ? MonomialOrder::lex(vars) : MonomialOrder::grevlex(vars);
    int n = g.pick(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(g.poly(vars, 4, lex ? 2 : 3, false));
    GroebnerBasis G = buchberger(gens, o);
    bool ok = is_groebner(G.gens, o);
    for (auto& p : gens) ok = ok && normal_form(p, G.gens, o).is_zero();
    if (!ok) fail(r, "case " + std::to_string(i) + ": basis " + render(G));
  });
}

Result gb_canonical(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = small_vars();
  return run("reduced basis canonicity", cases, [&](Result& r, int i) {
    std::vector<Polynomial> gens;
    bool lex = g.pick(0, 1);
    auto o = lex ? MonomialOrder::lex(vars) : MonomialOrder::grevlex(vars);
    int n = g.pick(2, 3);
    for (int k = 0; k < n; ++k) gens.push_back(g.poly(vars, 4, lex ? 2 : 3));
    GroebnerBasis a = buchberger(gens, o);
    std::vector<Polynomial> perm = gens;
    std::shuffle(perm.begin(), perm.end(), g.rng);
    for (auto& p : perm) p = p.scale(g.coeff());
    GroebnerBasis b = buchberger(perm, o);
    bool ok = a.gens == b.gens && render(a) == render(b);
    if (!ok) fail(r, "case " + std::to_string(i) + ": " + render(a) + " vs " + render(b));
  });
}

Result saturation_contains(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = small_vars();
  return run("saturation containment", cases, [&](Result& r, int i) {
    std::vector<Polynomial> gens;
    int n = g.pick(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(g.poly(vars, 3, 2, false));
    Polynomial h = g.poly(vars, 2, 1, false);
    if (h.is_zero()) h = Polynomial::var(vars[0]);
    auto o = MonomialOrder::grevlex(vars);
    GroebnerBasis S = saturate(gens, h, o);
    bool ok = true;
    for (auto& p : gens) ok = ok && normal_form(p, S.gens, S.order).is_zero();
    if (!ok) fail(r, "case " + std::to_string(i) + ": h = " + render(h) + ", basis " + render(S));
  });
}

Result parse_render(int cases, uint32_t seed) {
  Gen g(seed);
  auto vars = np_vars();
  vars.push_back(reg().deriv(DerivOp::delta, reg().intern("alpha")));
  vars.push_back(reg().deriv(DerivOp::D, reg().deriv(DerivOp::Delta, reg().intern("Phi12"))));
  vars.push_back(reg().intern("x1"));
  return run("parse/render round trip", cases, [&](Result& r, int i) {
    Polynomial p = g.pick(0, 20) == 0 ? Polynomial(0) : g.poly(vars, 6, 4);
    std::string s = render(p);
    Polynomial q = parse_expr(s);
    if (q != p || render(q) != s) fail(r, "case " + std::to_string(i) + ": " + s + " -> " + render(q));
  });
}

std::vector<Result> run_all(int cases, uint32_t seed) {
  return {ring_axioms(cases, seed),          conjugation(cases, seed + 1),    leibniz(cases, seed + 2),
          spoly_reduction(cases, seed + 3),  gb_canonical(cases, seed + 4),   saturation_contains(cases, seed + 5),
          parse_render(cases, seed + 6)};
}

}  // namespace hy::props
