// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "algebra/polynomial.hpp"

namespace hy {

// Dense univariate polynomial over Q, c[k] is the coefficient of x^k.
struct UPoly {
  std::vector<Rational> c;

  static UPoly from(const Polynomial& p, SymId x);
  Polynomial to(SymId x) const;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rational& lead() const { return c.back(); }
  void trim();
  UPoly derivative() const;
  UPoly monic() const;
  Rational eval(const Rational& x) const;
};

UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
// a = q * b + r
void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r);
UPoly gcd(const UPoly& a, const UPoly& b);
// Product of the distinct irreducible factors, monic.
UPoly squarefree_part(const UPoly& a);
// Rational roots by the rational root test; empty when the coefficients are
// too large to enumerate divisors.
std::optional<std::vector<Rational>> rational_roots(const UPoly& a);

// The single variable of p, if p is univariate and nonconstant.
std::optional<SymId> sole_variable(const Polynomial& p);

}  // namespace hy
