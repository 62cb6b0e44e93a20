// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/solve.hpp"

#include <map>

namespace hy {

Solved solve_for_atom(const Fraction& rel, SymId atom) {
  const Polynomial& n = rel.num();
  if (n.degree_in(atom) != 1) throw AlgebraError("not linearly solvable");
  Polynomial c1 = n.coeff(atom, 1);
  Polynomial c0 = n.coeff(atom, 0);
  Solved s;
  s.value = (Fraction(-c0) / Fraction(c1)).cancelled();
  if (!c1.is_constant()) s.nonzero = factor_out(c1).primitive;
  return s;
}

Polynomial eliminate_atom(const Polynomial& n1, const Polynomial& n2, const std::vector<SymId>& atoms) {
  if (atoms.empty()) throw AlgebraError("no atoms to eliminate");
  for (SymId a : atoms)
    if (n1.degree_in(a) > 1 || n2.degree_in(a) > 1) throw AlgebraError("atoms not jointly eliminable");
  SymId a = atoms.front();
  Polynomial c1 = n1.coeff(a, 1), c2 = n2.coeff(a, 1);
  if (c1.is_zero() || c2.is_zero()) throw AlgebraError("atoms not jointly eliminable");
  // Strip the common content so the multipliers stay small.
  auto f1 = factor_out(c1), f2 = factor_out(c2);
  Monomial g = f1.mono.gcd(f2.mono);
  Polynomial m1 = Polynomial::monomial(f2.mono / g, f2.content), m2 = Polynomial::monomial(f1.mono / g, f1.content);
  if (f1.primitive == f2.primitive) {
    // nothing further
  } else {
    m1 = m1 * f2.primitive;
    m2 = m2 * f1.primitive;
  }
  Polynomial r = m1 * n1 - m2 * n2;
  for (SymId b : atoms)
    if (r.contains(b)) throw AlgebraError("atoms not jointly eliminable");
  if (r.is_zero()) throw AlgebraError("relations are proportional");
  return factor_out(r).primitive;
}

std::optional<std::vector<Rational>> rational_span(const Polynomial& target, const std::vector<Polynomial>& sources) {
  // Columns: sources then target; rows: monomials.
  std::map<std::vector<Monomial::Entry>, size_t> row;
  auto idx = [&](const Monomial& m) {
    auto it = row.find(m.entries());
    if (it != row.end()) return it->second;
    size_t k = row.size();
    row.emplace(m.entries(), k);
    return k;
  };
  size_t n = sources.size();
  std::vector<std::map<size_t, Rational>> col(n + 1);
  for (size_t j = 0; j < n; ++j)
    for (auto& t : sources[j].terms()) col[j][idx(t.m)] = t.c;
  for (auto& t : target.terms()) col[n][idx(t.m)] = t.c;
  size_t rows = row.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
  for (size_t j = 0; j <= n; ++j)
    for (auto& [i, c] : col[j]) a[i][j] = c;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t j = 0; j < n && r < rows; ++j) {
    size_t p = r;
    while (p < rows && sgn(a[p][j]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][j];
    for (size_t k = j; k <= n; ++k) a[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][j]) == 0) continue;
      Rational f = a[i][j];
      for (size_t k = j; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(static_cast<int>(j));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;
  std::vector<Rational> coef(n);
  for (size_t i = 0; i < r; ++i) coef[pivot_col[i]] = a[i][n];
  return coef;
}

}  // namespace hy
