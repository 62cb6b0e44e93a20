// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "grobner/gb.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace hy {

namespace {

// Dense integer polynomial, terms sorted descending.
struct DPoly {
  std::vector<uint16_t> e;
  std::vector<Integer> c;
  uint32_t mask = 0;  // support of the leading monomial
  size_t size() const { return c.size(); }
  bool empty() const { return c.empty(); }
};

struct Ring {
  const MonomialOrder* o;
  size_t n;
  const uint16_t* mon(const DPoly& p, size_t i) const { return p.e.data() + i * n; }
  int cmp(const uint16_t* a, const uint16_t* b) const { return o->cmp(a, b); }
};

uint32_t mask_of(const uint16_t* a, size_t n) {
  uint32_t m = 0;
  for (size_t i = 0; i < n; ++i)
    if (a[i]) m |= 1u << (i % 32);
  return m;
}

uint32_t degree_of(const uint16_t* a, size_t n) {
  uint32_t d = 0;
  for (size_t i = 0; i < n; ++i) d += a[i];
  return d;
}

bool divides(const uint16_t* a, const uint16_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void set_mask(DPoly& p, const Ring& R) { p.mask = p.empty() ? 0 : mask_of(R.mon(p, 0), R.n); }

void make_primitive(DPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (auto& x : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.c[0]) < 0) g = -g;
  if (g != 1)
    for (auto& x : p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

uint64_t max_bits(const DPoly& p) {
  uint64_t b = 0;
  for (auto& x : p.c) b = std::max<uint64_t>(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

DPoly to_dense(const Polynomial& p, const Ring& R, Rational* scale) {
  std::vector<std::pair<std::vector<uint16_t>, Rational>> ts;
  for (auto& t : p.terms()) {
    std::vector<uint16_t> ex(R.n, 0);
    for (auto& [s, k] : t.m.entries()) {
      int i = R.o->index_of(s);
      if (i < 0) throw AlgebraError("variable " + reg().name(s) + " not in the order ranking");
      if (k > 60000) throw AlgebraError("exponent too large");
      ex[static_cast<size_t>(i)] = static_cast<uint16_t>(k);
    }
    ts.push_back({std::move(ex), t.c});
  }
  std::sort(ts.begin(), ts.end(),
            [&](const auto& a, const auto& b) { return R.cmp(a.first.data(), b.first.data()) > 0; });
  Integer l = 1;
  for (auto& [ex, c] : ts) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  DPoly d;
  for (auto& [ex, c] : ts) {
    d.e.insert(d.e.end(), ex.begin(), ex.end());
    Rational v = c * l;
    d.c.push_back(v.get_num());
  }
  if (scale) *scale = Rational(l);
  set_mask(d, R);
  return d;
}

Polynomial from_dense(const DPoly& d, const Ring& R, const Rational& div = 1) {
  std::vector<Term> ts;
  ts.reserve(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    std::vector<Monomial::Entry> e;
    const uint16_t* m = R.mon(d, i);
    for (size_t k = 0; k < R.n; ++k)
      if (m[k]) e.push_back({R.o->ranking[k], m[k]});
    ts.push_back({Monomial::from_entries(std::move(e)), Rational(d.c[i]) / div});
  }
  return Polynomial::from_terms(std::move(ts));
}

// out = a * f[fs..] - b * (shift * g[gs..])
void combine(DPoly& out, const Integer& a, const DPoly& f, size_t fs, const Integer& b, const uint16_t* shift,
             const DPoly& g, size_t gs, const Ring& R) {
  out.e.clear();
  out.c.clear();
  out.e.reserve((f.size() + g.size()) * R.n);
  out.c.reserve(f.size() + g.size());
  std::vector<uint16_t> tmp(R.n);
  size_t i = fs, j = gs;
  auto load = [&](size_t jj) {
    const uint16_t* gm = R.mon(g, jj);
    for (size_t k = 0; k < R.n; ++k) tmp[k] = static_cast<uint16_t>(gm[k] + (shift ? shift[k] : 0));
  };
  if (j < g.size()) load(j);
  Integer x;
  while (i < f.size() || j < g.size()) {
    int c;
    if (i == f.size())
      c = -1;
    else if (j == g.size())
      c = 1;
    else
      c = R.cmp(R.mon(f, i), tmp.data());
    if (c > 0) {
      const uint16_t* fm = R.mon(f, i);
      out.e.insert(out.e.end(), fm, fm + R.n);
      out.c.push_back(a * f.c[i]);
      ++i;
    } else if (c < 0) {
      out.e.insert(out.e.end(), tmp.begin(), tmp.end());
      out.c.push_back(-b * g.c[j]);
      ++j;
      if (j < g.size()) load(j);
    } else {
      x = a * f.c[i] - b * g.c[j];
      if (sgn(x)) {
        out.e.insert(out.e.end(), tmp.begin(), tmp.end());
        out.c.push_back(x);
      }
      ++i;
      ++j;
      if (j < g.size()) load(j);
    }
  }
}

struct Limits {
  const GbConfig* cfg;
  void check_bits(const DPoly& p) const {
    if (cfg && max_bits(p) > cfg->max_coeff_bits)
      throw ResourceError("coefficient bits", std::to_string(max_bits(p)) + " > " + std::to_string(cfg->max_coeff_bits));
  }
  void check_cancel() const {
    if (cfg && cfg->cancel && cfg->cancel->load()) throw ResourceError("cancelled", "stop requested");
  }
};

const DPoly* find_reducer(const uint16_t* m, uint32_t mmask, const std::vector<const DPoly*>& G, const Ring& R) {
  for (const DPoly* g : G) {
    if ((g->mask & ~mmask) != 0) continue;
    if (divides(R.mon(*g, 0), m, R.n)) return g;
  }
  return nullptr;
}

// Full reduction of f modulo G. When mult is given it accumulates the
// rational factor r/mult == normal form of the input.
DPoly reduce(DPoly f, const std::vector<const DPoly*>& G, const Ring& R, const Limits& L, Rational* mult) {
  DPoly r, tmp;
  std::vector<uint16_t> shift(R.n);
  size_t pos = 0;
  int steps = 0;
  while (pos < f.size()) {
    const uint16_t* lt = R.mon(f, pos);
    const DPoly* g = find_reducer(lt, mask_of(lt, R.n), G, R);
    if (!g) {
      r.e.insert(r.e.end(), lt, lt + R.n);
      r.c.push_back(f.c[pos]);
      ++pos;
      continue;
    }
    const uint16_t* gm = R.mon(*g, 0);
    for (size_t k = 0; k < R.n; ++k) shift[k] = static_cast<uint16_t>(lt[k] - gm[k]);
    Integer a = g->c[0], b = f.c[pos], gc;
    mpz_gcd(gc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), gc.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), gc.get_mpz_t());
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    combine(tmp, a, f, pos + 1, b, shift.data(), *g, 1, R);
    std::swap(f, tmp);
    pos = 0;
    if (a != 1) {
      for (auto& x : r.c) x *= a;
      if (mult) *mult *= a;
    }
    if (++steps % 8 == 0) {
      L.check_cancel();
      Integer gg = 0;
      for (auto& x : r.c) {
        mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), x.get_mpz_t());
        if (gg == 1) break;
      }
      if (gg != 1)
        for (auto& x : f.c) {
          mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), x.get_mpz_t());
          if (gg == 1) break;
        }
      if (gg > 1) {
        for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), gg.get_mpz_t());
        for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), gg.get_mpz_t());
        if (mult) *mult /= gg;
      }
      L.check_bits(f);
    }
  }
  set_mask(r, R);
  return r;
}

struct Pair {
  size_t i, j;
  std::vector<uint16_t> lcm;
  uint32_t deg;
};

std::vector<uint16_t> lcm_of(const uint16_t* a, const uint16_t* b, size_t n) {
  std::vector<uint16_t> l(n);
  for (size_t k = 0; k < n; ++k) l[k] = std::max(a[k], b[k]);
  return l;
}

bool coprime(const uint16_t* a, const uint16_t* b, size_t n) {
  for (size_t k = 0; k < n; ++k)
    if (a[k] && b[k]) return false;
  return true;
}

DPoly spoly(const DPoly& f, const DPoly& g, const Pair& p, const Ring& R) {
  std::vector<uint16_t> sf(R.n), sg(R.n);
  const uint16_t* fm = R.mon(f, 0);
  const uint16_t* gm = R.mon(g, 0);
  for (size_t k = 0; k < R.n; ++k) {
    sf[k] = static_cast<uint16_t>(p.lcm[k] - fm[k]);
    sg[k] = static_cast<uint16_t>(p.lcm[k] - gm[k]);
  }
  Integer a = g.c[0], b = f.c[0], gc;
  mpz_gcd(gc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), gc.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), gc.get_mpz_t());
  // a * sf * f - b * sg * g, leading terms cancel.
  DPoly fs;
  fs.c.assign(f.c.begin() + 1, f.c.end());
  for (size_t i = 1; i < f.size(); ++i) {
    const uint16_t* m = R.mon(f, i);
    for (size_t k = 0; k < R.n; ++k) fs.e.push_back(static_cast<uint16_t>(m[k] + sf[k]));
  }
  DPoly out;
  combine(out, a, fs, 0, b, sg.data(), g, 1, R);
  make_primitive(out);
  set_mask(out, R);
  return out;
}

class Buchberger {
 public:
  Buchberger(const Ring& R, const GbConfig& cfg) : R_(R), cfg_(cfg), L_{&cfg} {}

  // Returns false when the ideal is the unit ideal.
  bool run(std::vector<DPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const DPoly& a, const DPoly& b) {
      int c = R_.cmp(R_.mon(a, 0), R_.mon(b, 0));
      if (c) return c < 0;
      return a.size() < b.size();
    });
    for (auto& f : inputs) {
      DPoly h = reduce(std::move(f), active(), R_, L_, nullptr);
      make_primitive(h);
      set_mask(h, R_);
      if (h.empty()) continue;
      if (!insert(std::move(h))) return false;
    }
    while (!pairs_.empty()) {
      std::vector<Pair> batch = select();
      std::vector<DPoly> res(batch.size());
      auto snapshot = active();
      auto work = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k) {
          DPoly s = spoly(polys_[batch[k].i], polys_[batch[k].j], batch[k], R_);
          res[k] = reduce(std::move(s), snapshot, R_, L_, nullptr);
          make_primitive(res[k]);
          set_mask(res[k], R_);
        }
      };
      unsigned th = std::max(1u, cfg_.threads);
      if (th == 1 || batch.size() < 2) {
        work(0, batch.size());
      } else {
        std::vector<std::future<void>> fs;
        size_t chunk = (batch.size() + th - 1) / th;
        for (size_t lo = 0; lo < batch.size(); lo += chunk)
          fs.push_back(std::async(std::launch::async, work, lo, std::min(batch.size(), lo + chunk)));
        for (auto& f : fs) f.get();
      }
      for (auto& h : res) {
        stats.pairs++;
        if (stats.pairs > cfg_.max_pairs)
          throw ResourceError("pair reductions", std::to_string(stats.pairs) + " > " + std::to_string(cfg_.max_pairs));
        if (h.empty()) {
          stats.reductions_to_zero++;
          continue;
        }
        h = reduce(std::move(h), active(), R_, L_, nullptr);
        make_primitive(h);
        set_mask(h, R_);
        if (h.empty()) {
          stats.reductions_to_zero++;
          continue;
        }
        if (!insert(std::move(h))) return false;
      }
    }
    return true;
  }

  std::vector<DPoly> reduced_basis() {
    std::vector<size_t> idx;
    for (size_t i = 0; i < polys_.size(); ++i)
      if (alive_[i]) idx.push_back(i);
    std::vector<size_t> keep;
    for (size_t a : idx) {
      bool drop = false;
      for (size_t b : idx) {
        if (a == b) continue;
        const uint16_t* ma = R_.mon(polys_[a], 0);
        const uint16_t* mb = R_.mon(polys_[b], 0);
        if (divides(mb, ma, R_.n) && (R_.cmp(ma, mb) != 0 || b < a)) {
          drop = true;
          break;
        }
      }
      if (!drop) keep.push_back(a);
    }
    std::vector<DPoly> out;
    for (size_t a : keep) {
      std::vector<const DPoly*> others;
      for (size_t b : keep)
        if (b != a) others.push_back(&polys_[b]);
      const DPoly& g = polys_[a];
      Rational mult = 1;
      DPoly tail;
      tail.c.assign(g.c.begin() + 1, g.c.end());
      tail.e.assign(g.e.begin() + static_cast<long>(R_.n), g.e.end());
      DPoly red = reduce(std::move(tail), others, R_, L_, &mult);
      // red == mult * NF(tail); scale lead * mult + red to integers.
      Integer den = mult.get_den();
      DPoly full;
      full.e.assign(g.e.begin(), g.e.begin() + static_cast<long>(R_.n));
      full.c.push_back(g.c[0] * mult.get_num());
      for (size_t i = 0; i < red.size(); ++i) {
        const uint16_t* m = R_.mon(red, i);
        full.e.insert(full.e.end(), m, m + R_.n);
        full.c.push_back(red.c[i] * den);
      }
      make_primitive(full);
      set_mask(full, R_);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const DPoly& a, const DPoly& b) { return R_.cmp(R_.mon(a, 0), R_.mon(b, 0)) < 0; });
    return out;
  }

  GbStats stats;

 private:
  std::vector<const DPoly*> active() const {
    std::vector<const DPoly*> v;
    for (size_t i = 0; i < polys_.size(); ++i)
      if (alive_[i]) v.push_back(&polys_[i]);
    return v;
  }

  std::vector<Pair> select() {
    uint32_t best = UINT32_MAX;
    for (auto& p : pairs_) best = std::min(best, p.deg);
    std::vector<Pair> batch, rest;
    for (auto& p : pairs_) (p.deg == best ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      int c = R_.cmp(a.lcm.data(), b.lcm.data());
      if (c) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    return batch;
  }

  bool insert(DPoly h) {
    uint32_t d = degree_of(R_.mon(h, 0), R_.n);
    bool constant = d == 0;
    if (constant) return false;
    for (size_t i = 0; i < h.size(); ++i) {
      uint32_t td = degree_of(R_.mon(h, i), R_.n);
      stats.max_degree = std::max(stats.max_degree, td);
      if (td > cfg_.max_degree)
        throw ResourceError("total degree", std::to_string(td) + " > " + std::to_string(cfg_.max_degree));
    }
    stats.max_bits = std::max(stats.max_bits, max_bits(h));
    L_.check_bits(h);
    size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    alive_.push_back(true);
    const uint16_t* hm = R_.mon(polys_[hi], 0);
    // Gebauer-Moeller update.
    std::vector<Pair> C;
    for (size_t g = 0; g < hi; ++g) {
      if (!alive_[g]) continue;
      Pair p{g, hi, lcm_of(R_.mon(polys_[g], 0), hm, R_.n), 0};
      p.deg = degree_of(p.lcm.data(), R_.n);
      C.push_back(std::move(p));
    }
    std::vector<char> isco(C.size());
    for (size_t a = 0; a < C.size(); ++a) isco[a] = coprime(R_.mon(polys_[C[a].i], 0), hm, R_.n);
    std::vector<char> keepC(C.size(), 1);
    for (size_t a = 0; a < C.size(); ++a) {
      if (isco[a]) continue;
      for (size_t b = 0; b < C.size(); ++b) {
        if (a == b || !keepC[b]) continue;
        if (divides(C[b].lcm.data(), C[a].lcm.data(), R_.n)) {
          bool eq = C[b].lcm == C[a].lcm;
          if (!eq || b < a || isco[b]) {
            keepC[a] = 0;
            break;
          }
        }
      }
    }
    std::vector<Pair> E;
    for (size_t a = 0; a < C.size(); ++a) {
      if (!keepC[a]) continue;
      if (isco[a]) continue;
      // An lcm shared with a coprime pair is covered by that criterion.
      bool killed = false;
      for (size_t b = 0; b < C.size(); ++b)
        if (isco[b] && C[b].lcm == C[a].lcm) killed = true;
      if (!killed) E.push_back(std::move(C[a]));
    }
    std::vector<Pair> B;
    for (auto& p : pairs_) {
      bool drop = divides(hm, p.lcm.data(), R_.n);
      if (drop) {
        auto l1 = lcm_of(R_.mon(polys_[p.i], 0), hm, R_.n);
        auto l2 = lcm_of(R_.mon(polys_[p.j], 0), hm, R_.n);
        if (l1 == p.lcm || l2 == p.lcm) drop = false;
      }
      if (!drop) B.push_back(std::move(p));
    }
    for (auto& p : E) B.push_back(std::move(p));
    pairs_ = std::move(B);
    for (size_t g = 0; g < hi; ++g)
      if (alive_[g] && divides(hm, R_.mon(polys_[g], 0), R_.n)) alive_[g] = false;
    return true;
  }

  const Ring& R_;
  const GbConfig& cfg_;
  Limits L_;
  std::vector<DPoly> polys_;
  std::vector<char> alive_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Term> ordered_terms(const Polynomial& p, const MonomialOrder& o) {
  Ring R{&o, o.nvars()};
  std::vector<std::pair<std::vector<uint16_t>, const Term*>> v;
  for (auto& t : p.terms()) {
    std::vector<uint16_t> ex(R.n, 0);
    for (auto& [s, k] : t.m.entries()) {
      int i = o.index_of(s);
      if (i < 0) throw AlgebraError("variable " + reg().name(s) + " not in the order ranking");
      ex[static_cast<size_t>(i)] = static_cast<uint16_t>(k);
    }
    v.push_back({std::move(ex), &t});
  }
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return o.cmp(a.first.data(), b.first.data()) > 0; });
  std::vector<Term> out;
  for (auto& x : v) out.push_back(*x.second);
  return out;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& o) {
  if (p.is_zero()) return Monomial();
  return ordered_terms(p, o).front().m;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& o) {
  Ring R{&o, o.nvars()};
  std::vector<DPoly> gs;
  for (auto& g : G) {
    if (g.is_zero()) continue;
    DPoly d = to_dense(g, R, nullptr);
    make_primitive(d);
    gs.push_back(std::move(d));
  }
  std::vector<const DPoly*> gp;
  for (auto& d : gs) gp.push_back(&d);
  Rational scale;
  DPoly fd = to_dense(f, R, &scale);
  Rational mult = 1;
  DPoly r = reduce(std::move(fd), gp, R, Limits{nullptr}, &mult);
  return from_dense(r, R, mult * scale);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& o, const GbConfig& cfg) {
  Ring R{&o, o.nvars()};
  if (R.n > 32) throw AlgebraError("at most 32 variables supported in a ranking");
  GroebnerBasis out;
  out.order = o;
  std::vector<DPoly> in;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    DPoly d = to_dense(g, R, nullptr);
    make_primitive(d);
    in.push_back(std::move(d));
  }
  if (in.empty()) return out;
  Buchberger B(R, cfg);
  bool ok = B.run(std::move(in));
  out.stats = B.stats;
  if (!ok) {
    out.gens = {Polynomial(1)};
    return out;
  }
  for (auto& d : B.reduced_basis()) out.gens.push_back(from_dense(d, R));
  return out;
}

namespace {

void add_stats(GbStats& a, const GbStats& b) {
  a.pairs += b.pairs;
  a.reductions_to_zero += b.reductions_to_zero;
  a.max_degree = std::max(a.max_degree, b.max_degree);
  a.max_bits = std::max(a.max_bits, b.max_bits);
}

// Rabinowitsch saturation by a single factor q of a basis G.
GroebnerBasis saturate_factor(const std::vector<Polynomial>& G, const Polynomial& q, const MonomialOrder& o,
                              const GbConfig& cfg) {
  SymId t = reg().aux("_t");
  MonomialOrder e = MonomialOrder::elimination({t}, o);
  std::vector<Polynomial> g2 = G;
  g2.push_back(Polynomial::var(t) * q - Polynomial(1));
  GroebnerBasis E = buchberger(g2, e, cfg);
  std::vector<Polynomial> kept;
  for (auto& g : E.gens)
    if (!g.contains(t)) kept.push_back(g);
  GroebnerBasis out = buchberger(kept, o, cfg);
  add_stats(out.stats, E.stats);
  return out;
}

}  // namespace

std::vector<Polynomial> saturation_factors(const Polynomial& h) {
  if (h.is_zero()) throw AlgebraError("saturation by zero");
  auto f = factor_out(h);
  std::vector<Polynomial> out;
  for (auto& [s, k] : f.mono.entries()) out.push_back(Polynomial::var(s));
  if (!f.primitive.is_constant()) out.push_back(f.primitive);
  return out;
}

GroebnerBasis saturate(const std::vector<Polynomial>& gens, const Polynomial& h, const MonomialOrder& o,
                       const GbConfig& cfg) {
  // I : (fg)^inf = (I : f^inf) : g^inf, so saturate one factor at a time,
  // starting from a basis of I.
  auto factors = saturation_factors(h);
  GroebnerBasis G = buchberger(gens, o, cfg);
  GbStats total = G.stats;
  for (auto& q : factors) {
    if (G.is_unit() || G.gens.empty()) break;
    G = saturate_factor(G.gens, q, o, cfg);
    add_stats(total, G.stats);
  }
  G.stats = total;
  return G;
}

bool is_trivial(const std::vector<Polynomial>& gens, const MonomialOrder& o, const GbConfig& cfg) {
  return buchberger(gens, o, cfg).is_unit();
}

std::vector<SymId> default_ranking(const std::vector<Polynomial>& ps) {
  std::vector<SymId> v;
  for (auto& p : ps) {
    auto w = p.variables();
    v.insert(v.end(), w.begin(), w.end());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const GbConfig& cfg) {
  SymId u = reg().aux("_u");
  std::vector<Polynomial> g2 = gens;
  g2.push_back(Polynomial::var(u) * f - Polynomial(1));
  std::vector<SymId> r{u};
  for (SymId s : default_ranking(g2))
    if (s != u) r.push_back(s);
  return is_trivial(g2, MonomialOrder::grevlex(r), cfg);
}

bool is_groebner(const std::vector<Polynomial>& G, const MonomialOrder& o) {
  Ring R{&o, o.nvars()};
  std::vector<DPoly> ds;
  for (auto& g : G)
    if (!g.is_zero()) ds.push_back(to_dense(g, R, nullptr));
  std::vector<const DPoly*> gp;
  for (auto& d : ds) gp.push_back(&d);
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = i + 1; j < ds.size(); ++j) {
      Pair p{i, j, lcm_of(R.mon(ds[i], 0), R.mon(ds[j], 0), R.n), 0};
      DPoly s = spoly(ds[i], ds[j], p, R);
      if (!reduce(std::move(s), gp, R, Limits{nullptr}, nullptr).empty()) return false;
    }
  return true;
}

}  // namespace hy
