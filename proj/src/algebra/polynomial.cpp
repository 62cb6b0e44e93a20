// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "algebra/polynomial.hpp"

#include <algorithm>

namespace hy {

Monomial Monomial::var(SymId s, uint32_t e) {
  Monomial m;
  if (e) {
    m.e_.push_back({s, e});
    m.deg_ = e;
  }
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> e) {
  std::sort(e.begin(), e.end());
  Monomial m;
  for (auto& [s, k] : e) {
    if (!k) continue;
    if (!m.e_.empty() && m.e_.back().first == s)
      m.e_.back().second += k;
    else
      m.e_.push_back({s, k});
    m.deg_ += k;
  }
  return m;
}

uint32_t Monomial::exponent(SymId s) const {
  for (auto& [v, k] : e_)
    if (v == s) return k;
  return 0;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (auto& [v, k] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < k)
      return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
      ++i;
      ++j;
    }
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  size_t j = 0;
  for (auto& [v, k] : e_) {
    uint32_t sub = 0;
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j].second;
    if (sub > k) throw AlgebraError("monomial division not exact");
    if (k > sub) r.e_.push_back({v, k - sub});
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<Entry> v;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      v.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      v.push_back(o.e_[j++]);
    } else {
      v.push_back({e_[i].first, std::max(e_[i].second, o.e_[j].second)});
      ++i;
      ++j;
    }
  }
  return from_entries(std::move(v));
}

Monomial Monomial::gcd(const Monomial& o) const {
  std::vector<Entry> v;
  size_t j = 0;
  for (auto& [s, k] : e_) {
    while (j < o.e_.size() && o.e_[j].first < s) ++j;
    if (j < o.e_.size() && o.e_[j].first == s)
      v.push_back({s, std::min(k, o.e_[j].second)});
  }
  return from_entries(std::move(v));
}

Monomial Monomial::without(SymId s) const {
  std::vector<Entry> v;
  for (auto& e : e_)
    if (e.first != s) v.push_back(e);
  return from_entries(std::move(v));
}

int canonical_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  auto& x = a.entries();
  auto& y = b.entries();
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first == y[j].first) {
      if (x[i].second != y[j].second) return x[i].second > y[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      return x[i].first < y[j].first ? 1 : -1;
    }
  }
  if (i < x.size()) return 1;
  if (j < y.size()) return -1;
  return 0;
}

namespace {

bool term_gt(const Term& a, const Term& b) { return canonical_cmp(a.m, b.m) > 0; }

}  // namespace

Polynomial::Polynomial(long c) {
  if (c) t_.push_back({Monomial(), Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c)) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(SymId s) {
  Polynomial p;
  p.t_.push_back({Monomial::var(s), Rational(1)});
  return p;
}

Polynomial Polynomial::var(const std::string& name) {
  return var(reg().intern(name));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (sgn(c)) p.t_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_gt);
  Polynomial p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (sgn(p.t_.back().c) == 0) p.t_.pop_back();
    } else if (sgn(t.c)) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].m.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (t_.size() == 1 && t_[0].m.is_one()) return t_[0].c;
  return std::nullopt;
}

Rational Polynomial::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return Rational(0);
}

uint32_t Polynomial::total_degree() const {
  return t_.empty() ? 0 : t_.front().m.degree();
}

uint32_t Polynomial::degree_in(SymId s) const {
  uint32_t d = 0;
  for (auto& t : t_) d = std::max(d, t.m.exponent(s));
  return d;
}

std::vector<SymId> Polynomial::variables() const {
  std::vector<SymId> v;
  for (auto& t : t_)
    for (auto& e : t.m.entries()) v.push_back(e.first);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Polynomial::contains(SymId s) const {
  for (auto& t : t_)
    if (t.m.exponent(s)) return true;
  return false;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = canonical_cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Rational s = t_[i].c + o.t_[j].c;
      if (sgn(s)) r.t_.push_back({t_[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (t_.empty() || o.t_.empty()) return Polynomial();
  if (o.t_.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);
  if (t_.size() == 1) return o.mul_term(t_[0].m, t_[0].c);
  std::vector<Term> v;
  v.reserve(t_.size() * o.t_.size());
  for (auto& a : t_)
    for (auto& b : o.t_) v.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(v));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial();
  Polynomial r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
  return r;
}

Polynomial Polynomial::pow(long k) const {
  if (k < 0) throw AlgebraError("non-polynomial result");
  Polynomial r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool Polynomial::less(const Polynomial& o) const {
  size_t n = std::min(t_.size(), o.t_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = canonical_cmp(t_[i].m, o.t_[i].m);
    if (c) return c < 0;
    if (t_[i].c != o.t_[i].c) return t_[i].c < o.t_[i].c;
  }
  return t_.size() < o.t_.size();
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

Polynomial Polynomial::conjugate() const {
  auto& R = reg();
  std::vector<Term> v;
  v.reserve(t_.size());
  for (auto& t : t_) {
    std::vector<Monomial::Entry> e;
    e.reserve(t.m.entries().size());
    for (auto& [s, k] : t.m.entries()) e.push_back({R.conj(s), k});
    v.push_back({Monomial::from_entries(std::move(e)), t.c});
  }
  return from_terms(std::move(v));
}

Polynomial Polynomial::substitute(const std::map<SymId, Polynomial>& m) const {
  std::map<std::pair<SymId, uint32_t>, Polynomial> powers;
  auto power = [&](SymId s, uint32_t k) -> const Polynomial& {
    auto key = std::make_pair(s, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, m.at(s).pow(k)).first->second;
  };
  std::vector<Term> out;
  for (auto& t : t_) {
    std::vector<Monomial::Entry> keep;
    std::vector<std::pair<SymId, uint32_t>> mapped;
    for (auto& e : t.m.entries()) {
      if (m.count(e.first))
        mapped.push_back(e);
      else
        keep.push_back(e);
    }
    Polynomial acc = Polynomial::monomial(Monomial::from_entries(keep), t.c);
    for (auto& [s, k] : mapped) {
      acc = acc * power(s, k);
      if (acc.is_zero()) break;
    }
    for (auto& x : acc.t_) out.push_back(std::move(x));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::partial(SymId s) const {
  std::vector<Term> v;
  for (auto& t : t_) {
    uint32_t k = t.m.exponent(s);
    if (!k) continue;
    v.push_back({t.m / Monomial::var(s), t.c * k});
  }
  return from_terms(std::move(v));
}

Polynomial Polynomial::coeff(SymId s, uint32_t k) const {
  std::vector<Term> v;
  for (auto& t : t_)
    if (t.m.exponent(s) == k) v.push_back({t.m.without(s), t.c});
  return from_terms(std::move(v));
}

Polynomial Polynomial::primitive_integer() const {
  if (t_.empty()) return *this;
  auto f = factor_out(*this);
  return f.primitive.mul_term(f.mono, Rational(sgn(f.content)));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw AlgebraError("division by zero");
  std::vector<Term> q;
  Polynomial r = *this;
  const Term& ld = d.lead();
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!ld.m.divides(lr.m)) return std::nullopt;
    Monomial m = lr.m / ld.m;
    Rational c = lr.c / ld.c;
    q.push_back({m, c});
    r = r - d.mul_term(m, c);
  }
  return from_terms(std::move(q));
}

FactorOut factor_out(const Polynomial& p) {
  if (p.is_zero()) throw AlgebraError("factor_out of zero");
  Integer g = 0, l = 1;
  for (auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  }
  Rational content(g, l);
  content.canonicalize();
  if (sgn(p.lead().c) < 0) content = -content;
  Monomial mono = p.terms().front().m;
  for (auto& t : p.terms()) mono = mono.gcd(t.m);
  std::vector<Term> v;
  v.reserve(p.size());
  for (auto& t : p.terms()) v.push_back({t.m / mono, t.c / content});
  return {content, mono, Polynomial::from_terms(std::move(v))};
}

std::optional<Rational> proportional(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size() || b.is_zero()) return std::nullopt;
  Rational c = a.lead().c / b.lead().c;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].m != b.terms()[i].m) return std::nullopt;
    if (a.terms()[i].c != c * b.terms()[i].c) return std::nullopt;
  }
  return c;
}

}  // namespace hy
