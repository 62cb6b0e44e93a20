// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/fraction.hpp"

#include <algorithm>

namespace hy {

namespace {

void merge_factor(std::vector<Fraction::Factor>& den, const Polynomial& f, int e) {
  for (auto& [g, k] : den) {
    if (g == f) {
      k += e;
      return;
    }
  }
  den.push_back({f, e});
  std::sort(den.begin(), den.end(),
            [](const Fraction::Factor& a, const Fraction::Factor& b) {
              return a.first.less(b.first);
            });
}

}  // namespace

std::vector<Fraction::Factor> denominator_factors(const Polynomial& q, Rational* content) {
  if (q.is_zero()) throw AlgebraError("division by zero");
  auto f = factor_out(q);
  *content = f.content;
  std::vector<Fraction::Factor> out;
  for (auto& [s, k] : f.mono.entries()) merge_factor(out, Polynomial::var(s), static_cast<int>(k));
  if (!f.primitive.is_constant()) merge_factor(out, f.primitive, 1);
  return out;
}

void Fraction::add_den(const Polynomial& q, int e) {
  Rational c;
  auto fs = denominator_factors(q, &c);
  Rational ce = 1;
  for (int i = 0; i < e; ++i) ce *= c;
  num_ = num_.scale(1 / ce);
  for (auto& [f, k] : fs) merge_factor(den_, f, k * e);
}

Fraction Fraction::make(Polynomial num, std::vector<Factor> den) {
  Fraction r(num);
  for (auto& [f, k] : den) {
    if (k < 0) throw AlgebraError("negative denominator exponent");
    if (k) r.add_den(f, k);
  }
  return r;
}

Polynomial Fraction::den_poly() const {
  Polynomial d(1);
  for (auto& [f, k] : den_) d = d * f.pow(k);
  return d;
}

Fraction Fraction::operator*(const Fraction& o) const {
  Fraction r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (auto& [f, k] : o.den_) merge_factor(r.den_, f, k);
  return r;
}

Fraction Fraction::operator+(const Fraction& o) const {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return o;
  if (den_ == o.den_) {
    Fraction r;
    r.num_ = num_ + o.num_;
    if (!r.num_.is_zero()) r.den_ = den_;
    return r;
  }
  std::vector<Factor> l = den_;
  for (auto& [f, k] : o.den_) {
    bool found = false;
    for (auto& [g, j] : l) {
      if (g == f) {
        j = std::max(j, k);
        found = true;
      }
    }
    if (!found) merge_factor(l, f, k);
  }
  auto lift = [&](const Fraction& x) {
    Polynomial p = x.num_;
    for (auto& [f, k] : l) {
      int have = 0;
      for (auto& [g, j] : x.den_)
        if (g == f) have = j;
      if (k > have) p = p * f.pow(k - have);
    }
    return p;
  };
  Fraction r;
  r.num_ = lift(*this) + lift(o);
  if (!r.num_.is_zero()) r.den_ = std::move(l);
  return r;
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::inverse() const {
  if (num_.is_zero()) throw AlgebraError("division by zero");
  Fraction r(den_poly());
  r.add_den(num_, 1);
  return r;
}

Fraction Fraction::operator/(const Fraction& o) const { return *this * o.inverse(); }

Fraction Fraction::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Fraction r;
  r.num_ = num_.pow(k);
  if (r.num_.is_zero() || k == 0) return r;
  for (auto& [f, e] : den_) r.den_.push_back({f, static_cast<int>(e * k)});
  return r;
}

Fraction Fraction::conjugate() const {
  std::vector<Factor> d;
  for (auto& [f, k] : den_) d.push_back({f.conjugate(), k});
  return make(num_.conjugate(), std::move(d));
}

namespace {

Fraction subst_poly(const Polynomial& p, const std::map<SymId, Fraction>& m) {
  std::map<SymId, uint32_t> deg;
  for (auto& t : p.terms())
    for (auto& [s, k] : t.m.entries())
      if (m.count(s)) deg[s] = std::max(deg[s], k);
  if (deg.empty()) return Fraction(p);
  std::map<SymId, Polynomial> dpoly;
  std::map<std::pair<SymId, uint32_t>, Polynomial> npow, dpow;
  for (auto& [s, d] : deg) dpoly[s] = m.at(s).den_poly();
  auto get_pow = [](auto& cache, const Polynomial& base, SymId s, uint32_t k) -> const Polynomial& {
    auto key = std::make_pair(s, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, base.pow(k)).first->second;
  };
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    std::vector<Monomial::Entry> keep;
    std::map<SymId, uint32_t> mapped;
    for (auto& e : t.m.entries()) {
      if (m.count(e.first))
        mapped[e.first] = e.second;
      else
        keep.push_back(e);
    }
    Polynomial acc = Polynomial::monomial(Monomial::from_entries(keep), t.c);
    for (auto& [s, d] : deg) {
      uint32_t k = mapped.count(s) ? mapped[s] : 0;
      if (k) acc = acc * get_pow(npow, m.at(s).num(), s, k);
      if (d > k) acc = acc * get_pow(dpow, dpoly[s], s, d - k);
    }
    for (auto& x : acc.terms()) out.push_back(x);
  }
  std::vector<Fraction::Factor> den;
  for (auto& [s, d] : deg)
    for (auto& [f, k] : m.at(s).den()) merge_factor(den, f, static_cast<int>(k * d));
  return Fraction::make(Polynomial::from_terms(std::move(out)), std::move(den));
}

}  // namespace

Fraction Fraction::substitute(const std::map<SymId, Fraction>& m) const {
  Fraction r = subst_poly(num_, m);
  for (auto& [f, k] : den_) r = r / subst_poly(f, m).pow(k);
  return r;
}

Fraction Fraction::cancelled() const {
  Fraction r = *this;
  for (auto& [f, k] : r.den_) {
    while (k > 0) {
      auto q = r.num_.divide_exact(f);
      if (!q) break;
      r.num_ = *q;
      --k;
    }
  }
  std::erase_if(r.den_, [](const Factor& x) { return x.second == 0; });
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

std::vector<SymId> Fraction::variables() const {
  std::vector<SymId> v = num_.variables();
  for (auto& [f, k] : den_) {
    auto w = f.variables();
    v.insert(v.end(), w.begin(), w.end());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Fraction::contains(SymId s) const {
  if (num_.contains(s)) return true;
  for (auto& [f, k] : den_)
    if (f.contains(s)) return true;
  return false;
}

}  // namespace hy
