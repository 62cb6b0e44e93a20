// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra/symbols.hpp"

namespace hy {

using Rational = mpq_class;
using Integer = mpz_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse exponent map, entries sorted by symbol id.
class Monomial {
 public:
  using Entry = std::pair<SymId, uint32_t>;

  Monomial() = default;
  static Monomial var(SymId s, uint32_t e = 1);
  static Monomial from_entries(std::vector<Entry> e);

  const std::vector<Entry>& entries() const { return e_; }
  uint32_t degree() const { return deg_; }
  uint32_t exponent(SymId s) const;
  bool is_one() const { return e_.empty(); }
  bool divides(const Monomial& o) const;

  Monomial operator*(const Monomial& o) const;
  // Requires divides(o) for o / *this style use: returns a / b.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  Monomial without(SymId s) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<Entry> e_;
  uint32_t deg_ = 0;
};

// Ambient order: total degree, then lexicographic with smaller ids ranked
// higher. Returns <0, 0, >0.
int canonical_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT
  explicit Polynomial(const Rational& c);
  static Polynomial var(SymId s);
  static Polynomial var(const std::string& name);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  // Terms in any order, duplicates merged.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  const Term& lead() const { return t_.front(); }
  uint32_t total_degree() const;
  uint32_t degree_in(SymId s) const;
  std::vector<SymId> variables() const;
  bool contains(SymId s) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(long k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial conjugate() const;
  Polynomial substitute(const std::map<SymId, Polynomial>& m) const;
  Polynomial partial(SymId s) const;
  // Coefficient of s^k, as a polynomial free of s.
  Polynomial coeff(SymId s, uint32_t k) const;
  // Rational scalar times this polynomial to make it integer with coprime coefficients.
  Polynomial primitive_integer() const;
  // Exact division; nullopt when the remainder is nonzero.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  // Ordered comparison for use as a map key.
  bool less(const Polynomial& o) const;

 private:
  std::vector<Term> t_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

struct FactorOut {
  Rational content;
  Monomial mono;
  Polynomial primitive;
};

// p = content * mono * primitive; primitive has coprime integer
// coefficients, positive leading coefficient, no monomial factor.
FactorOut factor_out(const Polynomial& p);

// Exact rational c with a == c * b, if one exists.
std::optional<Rational> proportional(const Polynomial& a, const Polynomial& b);

}  // namespace hy
