// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "grobner/univariate.hpp"

#include <algorithm>
#include <set>

namespace hy {

UPoly UPoly::from(const Polynomial& p, SymId x) {
  UPoly u;
  for (auto& t : p.terms()) {
    if (t.m.entries().size() > 1 || (!t.m.is_one() && t.m.entries()[0].first != x))
      throw AlgebraError("not univariate");
    size_t k = t.m.exponent(x);
    if (u.c.size() <= k) u.c.resize(k + 1);
    u.c[k] += t.c;
  }
  u.trim();
  return u;
}

Polynomial UPoly::to(SymId x) const {
  std::vector<Term> ts;
  for (size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0) ts.push_back({k ? Monomial::var(x, static_cast<uint32_t>(k)) : Monomial(), c[k]});
  return Polynomial::from_terms(std::move(ts));
}

void UPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

UPoly UPoly::derivative() const {
  UPoly d;
  for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<long>(k));
  d.trim();
  return d;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly m = *this;
  Rational l = lead();
  for (auto& x : m.c) x /= l;
  return m;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r) {
  if (b.is_zero()) throw AlgebraError("division by zero");
  UPoly rem = a, quo;
  if (rem.degree() >= b.degree()) quo.c.assign(rem.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    Rational f = rem.lead() / b.lead();
    quo.c[k] = f;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + k] -= f * b.c[i];
    rem.trim();
  }
  quo.trim();
  if (q) *q = quo;
  if (r) *r = rem;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r;
    divmod(x, y, nullptr, &r);
    x = y;
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  UPoly g = gcd(a, a.derivative()), q;
  divmod(a, g, &q, nullptr);
  return q.monic();
}

namespace {

std::optional<std::vector<Integer>> divisors(Integer n) {
  if (n < 0) n = -n;
  if (sgn(n) == 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 62) return std::nullopt;
  unsigned long v = n.get_ui();
  std::vector<Integer> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (d > 4000000) return std::nullopt;
    if (v % d == 0) {
      out.push_back(Integer(d));
      if (d != v / d) out.push_back(Integer(v / d));
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const UPoly& a) {
  std::set<Rational> roots;
  UPoly p = a;
  if (p.degree() <= 0) return std::vector<Rational>{};
  // Strip x^k.
  size_t z = 0;
  while (z < p.c.size() && sgn(p.c[z]) == 0) ++z;
  if (z) {
    roots.insert(Rational(0));
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(z));
  }
  if (p.degree() >= 1) {
    Integer l = 1;
    for (auto& x : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ic;
    for (auto& x : p.c) ic.push_back(Integer(x * l));
    auto ps = divisors(ic.front()), qs = divisors(ic.back());
    if (!ps || !qs) return std::nullopt;
    for (auto& pp : *ps)
      for (auto& qq : *qs)
        for (int s : {1, -1}) {
          Rational r(pp * s, qq);
          r.canonicalize();
          if (sgn(p.eval(r)) == 0) roots.insert(r);
        }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

std::optional<SymId> sole_variable(const Polynomial& p) {
  auto v = p.variables();
  if (v.size() != 1) return std::nullopt;
  return v[0];
}

}  // namespace hy
