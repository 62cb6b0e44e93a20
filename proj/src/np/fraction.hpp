// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "algebra/polynomial.hpp"

namespace hy {

// Numerator over a product of primitive factors. No gcd cancellation beyond
// exact division by listed factors; the denominator factors double as the
// nonzero side conditions of whatever produced them.
class Fraction {
 public:
  using Factor = std::pair<Polynomial, int>;

  Fraction() = default;
  Fraction(const Polynomial& p) : num_(p) {}  // NOLINT
  Fraction(long c) : num_(c) {}               // NOLINT

  const Polynomial& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  Polynomial den_poly() const;

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const;
  Fraction pow(long k) const;
  Fraction inverse() const;
  Fraction conjugate() const;
  Fraction substitute(const std::map<SymId, Fraction>& m) const;
  // Remove listed denominator factors that divide the numerator exactly.
  Fraction cancelled() const;

  std::vector<SymId> variables() const;
  bool contains(SymId s) const;

  static Fraction make(Polynomial num, std::vector<Factor> den);

 private:
  void add_den(const Polynomial& q, int e);
  Polynomial num_;
  std::vector<Factor> den_;
};

// Split q into a rational, single-variable factors and a primitive part.
std::vector<Fraction::Factor> denominator_factors(const Polynomial& q, Rational* content);

}  // namespace hy
