// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "grobner/roots.hpp"

#include <cmath>

namespace hy {

namespace {

struct CF {
  mpf_class re, im;
};

CF mk(unsigned bits) { return {mpf_class(0, bits), mpf_class(0, bits)}; }

CF add(const CF& a, const CF& b, unsigned bits) {
  CF r = mk(bits);
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  return r;
}

CF sub(const CF& a, const CF& b, unsigned bits) {
  CF r = mk(bits);
  r.re = a.re - b.re;
  r.im = a.im - b.im;
  return r;
}

CF mul(const CF& a, const CF& b, unsigned bits) {
  CF r = mk(bits);
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

CF div(const CF& a, const CF& b, unsigned bits) {
  CF r = mk(bits);
  mpf_class d(b.re * b.re + b.im * b.im, bits);
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  return r;
}

mpf_class norm(const CF& a, unsigned bits) { return mpf_class(a.re * a.re + a.im * a.im, bits); }

CRational cmul(const CRational& a, const CRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CRational csub(const CRational& a, const CRational& b) { return {a.re - b.re, a.im - b.im}; }

Rational cnorm(const CRational& a) { return a.re * a.re + a.im * a.im; }

// Horner evaluation of p and p'.
void horner(const std::vector<CF>& c, const CF& z, CF* p, CF* dp, unsigned bits) {
  CF v = mk(bits), d = mk(bits);
  for (size_t k = c.size(); k-- > 0;) {
    d = add(mul(d, z, bits), v, bits);
    v = add(mul(v, z, bits), c[k], bits);
  }
  *p = v;
  *dp = d;
}

CRational ceval(const UPoly& p, const CRational& z) {
  CRational acc{0, 0};
  for (size_t k = p.c.size(); k-- > 0;) {
    acc = cmul(acc, z);
    acc.re += p.c[k];
  }
  return acc;
}

Rational abs_upper(const CRational& a) { return abs(a.re) + abs(a.im); }

}  // namespace

Rational sqrt_upper(const Rational& x) {
  if (sgn(x) <= 0) return 0;
  mpf_class f(x, 128);
  mpf_class s(0, 128);
  mpf_sqrt(s.get_mpf_t(), f.get_mpf_t());
  Rational r(s);
  Rational step(1, 1000000);
  r += r * step + Rational(1, Integer(1) << 200);
  while (r * r < x) r *= Rational(2);
  return r;
}

std::optional<std::vector<RootDisk>> isolate_roots(const UPoly& p, unsigned bits) {
  int n = p.degree();
  if (n <= 0) return std::vector<RootDisk>{};
  if (n == 1) return std::vector<RootDisk>{{{-p.c[0] / p.c[1], 0}, 0}};
  std::vector<CF> c;
  for (auto& x : p.c) {
    CF v = mk(bits);
    v.re = mpf_class(x, bits);
    c.push_back(v);
  }
  // Cauchy bound for the initial circle.
  mpf_class bound(1, bits);
  for (int k = 0; k < n; ++k) {
    mpf_class r(abs(p.c[k] / p.lead()), bits);
    if (r + 1 > bound) bound = r + 1;
  }
  std::vector<CF> z(n, mk(bits));
  for (int k = 0; k < n; ++k) {
    double ang = 2 * M_PI * (k + 0.25) / n + 0.4;
    z[k].re = bound * mpf_class(std::cos(ang), bits) * mpf_class(0.5, bits);
    z[k].im = bound * mpf_class(std::sin(ang), bits) * mpf_class(0.5, bits);
  }
  mpf_class tol(1, bits);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits - 8);
  for (int it = 0; it < 2000; ++it) {
    mpf_class worst(0, bits);
    for (int i = 0; i < n; ++i) {
      CF pv = mk(bits), dpv = mk(bits);
      horner(c, z[i], &pv, &dpv, bits);
      if (norm(pv, bits) == 0) continue;
      CF ratio = div(pv, dpv, bits);
      CF s = mk(bits);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        CF one = mk(bits);
        one.re = 1;
        s = add(s, div(one, sub(z[i], z[j], bits), bits), bits);
      }
      CF one = mk(bits);
      one.re = 1;
      CF w = div(ratio, sub(one, mul(ratio, s, bits), bits), bits);
      z[i] = sub(z[i], w, bits);
      mpf_class m = norm(w, bits) / (norm(z[i], bits) + 1);
      if (m > worst) worst = m;
    }
    if (worst < tol * tol) break;
  }
  // Exact Smith radii.
  std::vector<CRational> zc;
  for (auto& x : z) zc.push_back({Rational(x.re), Rational(x.im)});
  std::vector<Rational> r2(n);
  Rational an2 = p.lead() * p.lead();
  for (int i = 0; i < n; ++i) {
    Rational prod = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= cnorm(csub(zc[i], zc[j]));
    if (sgn(prod) == 0) return std::nullopt;
    r2[i] = Rational(n * n) * cnorm(ceval(p, zc[i])) / (an2 * prod);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(cnorm(csub(zc[i], zc[j])) > 2 * (r2[i] + r2[j]))) return std::nullopt;
  std::vector<RootDisk> out;
  for (int i = 0; i < n; ++i) out.push_back({zc[i], sqrt_upper(r2[i])});
  return out;
}

RootDisk eval_disk(const UPoly& q, const RootDisk& d) {
  // Taylor expansion at the center: |q(z) - q(c)| <= sum_k |q_k(c)| r^k.
  std::vector<CRational> coef;
  UPoly cur = q;
  Rational fact = 1;
  RootDisk out{ceval(q, d.center), 0};
  Rational rk = 1;
  for (int k = 1; k <= q.degree(); ++k) {
    cur = cur.derivative();
    fact *= k;
    rk *= d.radius;
    CRational v = ceval(cur, d.center);
    out.radius += abs_upper(v) / fact * rk;
  }
  return out;
}

}  // namespace hy
