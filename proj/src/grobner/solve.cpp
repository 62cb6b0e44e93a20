// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "grobner/solve.hpp"

#include <algorithm>
#include <set>

#include "grobner/roots.hpp"
#include "grobner/univariate.hpp"

namespace hy {

namespace {

std::string key_of(const std::vector<Polynomial>& G) {
  std::string s;
  for (auto& g : G) {
    for (auto& t : g.terms()) {
      s += t.c.get_str() + "*";
      for (auto& [v, k] : t.m.entries()) s += std::to_string(v) + "^" + std::to_string(k) + ".";
      s += "+";
    }
    s += ";";
  }
  return s;
}

std::vector<SymId> full_ranking(const std::vector<Polynomial>& ps, std::vector<SymId> r) {
  std::set<SymId> have(r.begin(), r.end());
  for (SymId s : default_ranking(ps))
    if (!have.count(s)) r.push_back(s);
  return r;
}

GroebnerBasis branch_basis(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& nonzero,
                           const std::vector<SymId>& ranking, const GbConfig& cfg) {
  MonomialOrder gv = MonomialOrder::grevlex(ranking);
  GroebnerBasis G = buchberger(gens, gv, cfg);
  for (auto& h : nonzero) {
    if (G.is_unit()) break;
    G = saturate(G.gens, h, gv, cfg);
  }
  if (G.is_unit()) return G;
  return buchberger(G.gens, MonomialOrder::lex(ranking), cfg);
}

// Factors splitting the branch, with a description; empty when none applies.
std::vector<Polynomial> find_split(const std::vector<Polynomial>& G, std::string* why) {
  for (auto& g : G) {
    auto f = factor_out(g);
    std::vector<Polynomial> parts;
    for (auto& [s, k] : f.mono.entries()) parts.push_back(Polynomial::var(s));
    if (!f.primitive.is_constant()) parts.push_back(f.primitive);
    bool reducible = parts.size() > 1 || (!f.mono.is_one() && f.mono.degree() > 1);
    if (reducible) {
      *why = "content split";
      return parts;
    }
    auto x = sole_variable(g);
    if (!x) continue;
    UPoly u = UPoly::from(g, *x);
    UPoly sq = squarefree_part(u);
    if (sq.degree() < u.degree()) {
      *why = "squarefree part";
      return {sq.to(*x)};
    }
    if (u.degree() < 2) continue;
    auto roots = rational_roots(u);
    if (!roots || roots->empty()) continue;
    std::vector<Polynomial> out;
    UPoly rest = u;
    for (auto& r : *roots) {
      UPoly lin;
      lin.c = {-r, Rational(1)};
      divmod(rest, lin, &rest, nullptr);
      out.push_back(lin.to(*x));
    }
    if (rest.degree() > 0) out.push_back(rest.to(*x));
    *why = "rational roots";
    return out;
  }
  return {};
}

}  // namespace

std::vector<TriangularSystem> gsolve(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& nonzero,
                                     const GsolveOptions& opt, const GbConfig& cfg, GroebnerBasis* base) {
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), nonzero.begin(), nonzero.end());
  std::vector<SymId> ranking = full_ranking(all, opt.ranking);
  MonomialOrder lex = MonomialOrder::lex(ranking);
  struct Work {
    std::vector<Polynomial> G;
    std::vector<std::string> trail;
    int depth;
  };
  std::vector<TriangularSystem> done;
  std::set<std::string> seen;
  GroebnerBasis G0 = branch_basis(gens, nonzero, ranking, cfg);
  if (base) *base = G0;
  if (G0.is_unit()) return {};
  std::vector<Work> stack{{G0.gens, {}, 0}};
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    std::string why;
    auto parts = w.depth < opt.max_depth ? find_split(w.G, &why) : std::vector<Polynomial>{};
    if (parts.empty()) {
      std::string k = key_of(w.G);
      if (seen.insert(k).second) {
        done.push_back({w.G, lex, w.trail});
        if (done.size() > opt.max_systems) throw ResourceError("gsolve systems", std::to_string(done.size()));
      }
      continue;
    }
    for (auto& q : parts) {
      std::vector<Polynomial> g2 = w.G;
      g2.push_back(q);
      GroebnerBasis B = branch_basis(g2, nonzero, ranking, cfg);
      if (B.is_unit()) continue;
      Work n{B.gens, w.trail, w.depth + 1};
      n.trail.push_back(why + ": " + std::to_string(q.size()) + "-term factor");
      stack.push_back(std::move(n));
    }
  }
  std::sort(done.begin(), done.end(), [](const TriangularSystem& a, const TriangularSystem& b) {
    return key_of(a.gens) < key_of(b.gens);
  });
  return done;
}

const char* filter_status_name(FilterStatus s) {
  switch (s) {
    case FilterStatus::Kept: return "kept";
    case FilterStatus::Dropped: return "dropped";
    case FilterStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Terms a*x*~x (or a*x^2 for a self-paired x) plus a constant.
std::optional<TorusRelation> torus_relation(const Polynomial& g) {
  TorusRelation t;
  bool has_var = false;
  for (auto& term : g.terms()) {
    if (term.m.is_one()) {
      t.rhs = -term.c;
      continue;
    }
    auto& e = term.m.entries();
    SymId x;
    if (e.size() == 2 && e[0].second == 1 && e[1].second == 1 && reg().conj(e[0].first) == e[1].first)
      x = e[0].first;
    else if (e.size() == 1 && e[0].second == 2 && reg().conj(e[0].first) == e[0].first)
      x = e[0].first;
    else
      return std::nullopt;
    t.terms.push_back({x, term.c});
    has_var = true;
  }
  if (!has_var) return std::nullopt;
  return t;
}

// Some t >= 0 with sum a_i t_i = rhs.
bool torus_feasible(const TorusRelation& t) {
  if (sgn(t.rhs) == 0) return true;
  for (auto& [x, a] : t.terms)
    if (sgn(a) == sgn(t.rhs)) return true;
  return false;
}

// Some feasible t with t_j > 0 for the term of x.
bool torus_allows_nonzero(const TorusRelation& t, SymId x) {
  const Rational* aj = nullptr;
  for (auto& [y, a] : t.terms)
    if (y == x || y == reg().conj(x)) aj = &a;
  if (!aj) return true;
  if (sgn(t.rhs) != 0) {
    if (sgn(*aj) == sgn(t.rhs)) return true;
    for (auto& [y, a] : t.terms)
      if (&a != aj && sgn(a) == sgn(t.rhs)) return true;
    return false;
  }
  for (auto& [y, a] : t.terms)
    if (&a != aj && sgn(a) != sgn(*aj)) return true;
  return false;
}

std::string torus_text(const TorusRelation& t) {
  std::string s;
  for (auto& [x, a] : t.terms) s += (s.empty() ? "" : " + ") + a.get_str() + "*|" + reg().name(x) + "|^2";
  return s + " = " + t.rhs.get_str();
}

struct PointCheck {
  bool certified = false;
  bool any_consistent = false;
};

// Shape-position solve of a zero-dimensional system and conjugation check
// of every point.
PointCheck check_points(const std::vector<Polynomial>& B, const std::vector<SymId>& vars, unsigned bits,
                        int attempt, const GbConfig& cfg) {
  PointCheck pc;
  SymId w = reg().aux("_w");
  Polynomial form = Polynomial::var(w);
  for (size_t i = 0; i < vars.size(); ++i)
    form -= Polynomial::var(vars[i]).scale(Rational(static_cast<long>(1 + (i * (attempt + 2)) % (7 + attempt))));
  std::vector<SymId> rank = vars;
  rank.push_back(w);
  MonomialOrder lex = MonomialOrder::lex(rank);
  std::vector<Polynomial> g = B;
  g.push_back(form);
  GroebnerBasis G = buchberger(g, lex, cfg);
  // Radical: replace the eliminant by its squarefree part.
  std::optional<Polynomial> elim;
  for (auto& p : G.gens)
    if (sole_variable(p) == w) elim = p;
  if (!elim) return pc;
  UPoly pw = squarefree_part(UPoly::from(*elim, w));
  g = G.gens;
  g.push_back(pw.to(w));
  G = buchberger(g, lex, cfg);
  if (G.is_unit()) {
    pc.certified = true;
    return pc;
  }
  std::map<SymId, UPoly> param;
  for (auto& p : G.gens) {
    if (sole_variable(p) == w) {
      pw = squarefree_part(UPoly::from(p, w));
      continue;
    }
    const Term lt = ordered_terms(p, lex).front();
    if (lt.m.degree() != 1 || lt.m.entries()[0].first == w) return pc;
    SymId v = lt.m.entries()[0].first;
    Polynomial rest = p - Polynomial::monomial(lt.m, lt.c);
    if (rest.contains(v)) return pc;
    for (SymId s : rest.variables())
      if (s != w) return pc;
    param[v] = UPoly::from(rest.scale(-1 / lt.c), w);
  }
  for (SymId v : vars)
    if (!param.count(v)) return pc;
  auto disks = isolate_roots(pw, bits);
  if (!disks) return pc;
  pc.certified = true;
  for (auto& d : *disks) {
    std::map<SymId, RootDisk> at;
    for (SymId v : vars) at[v] = eval_disk(param[v], d);
    bool ok = true;
    for (SymId v : vars) {
      SymId cv = reg().conj(v);
      auto it = at.find(cv);
      if (it == at.end()) continue;
      const RootDisk& a = at[v];
      const RootDisk& b = it->second;
      Rational dre = a.center.re - b.center.re, dim = a.center.im + b.center.im;
      Rational rr = a.radius + b.radius;
      if (dre * dre + dim * dim > rr * rr) ok = false;
    }
    if (ok) pc.any_consistent = true;
  }
  return pc;
}

}  // namespace

std::vector<FilterResult> conjugation_filter(const std::vector<TriangularSystem>& systems, const FilterOptions& opt,
                                             const GbConfig& cfg) {
  std::vector<FilterResult> out;
  for (auto& sys : systems) {
    FilterResult fr;
    fr.system = sys;
    std::vector<Polynomial> aug = sys.gens;
    for (auto& g : sys.gens) aug.push_back(g.conjugate());
    std::vector<SymId> rank = sys.order.ranking;
    std::set<SymId> have(rank.begin(), rank.end());
    for (SymId s : std::vector<SymId>(rank))
      if (!have.count(reg().conj(s))) {
        rank.push_back(reg().conj(s));
        have.insert(reg().conj(s));
      }
    rank = full_ranking(aug, rank);
    MonomialOrder lex = MonomialOrder::lex(rank);
    GroebnerBasis A = buchberger(aug, lex, cfg);
    fr.augmented = A.gens;
    if (A.is_unit()) {
      fr.status = FilterStatus::Dropped;
      fr.note = "no common solution with the conjugate system";
      out.push_back(std::move(fr));
      continue;
    }
    // Torus reduction: relations in |x|^2 only, over variables used nowhere else.
    std::vector<Polynomial> rest;
    std::vector<std::string> notes;
    bool dropped = false;
    for (auto& g : A.gens) {
      auto tr = torus_relation(g);
      bool isolated = tr.has_value();
      if (tr) {
        for (auto& h : A.gens) {
          if (&h == &g) continue;
          for (auto& [x, a] : tr->terms)
            if (h.contains(x) || h.contains(reg().conj(x))) isolated = false;
        }
      }
      if (!isolated) {
        rest.push_back(g);
        continue;
      }
      fr.torus.push_back(*tr);
      notes.push_back(torus_text(*tr));
      if (!torus_feasible(*tr)) dropped = true;
    }
    fr.rest = rest;
    if (dropped) {
      fr.status = FilterStatus::Dropped;
      fr.note = "infeasible torus relation " + notes.back();
      out.push_back(std::move(fr));
      continue;
    }
    std::vector<SymId> vars = default_ranking(rest);
    auto zero_dimensional = [&](const std::vector<Polynomial>& B) {
      for (SymId v : vars) {
        bool pure = false;
        for (auto& g : B) {
          Monomial lm = leading_monomial(g, lex);
          if (lm.entries().size() == 1 && lm.entries()[0].first == v) pure = true;
        }
        if (!pure) return false;
      }
      return true;
    };
    bool zero_dim = zero_dimensional(rest);
    std::string torus;
    for (auto& n : notes) torus += (torus.empty() ? "" : ", ") + n;
    if (rest.empty()) {
      fr.status = FilterStatus::Kept;
      fr.note = torus.empty() ? "no constraints" : "torus " + torus;
      out.push_back(std::move(fr));
      continue;
    }
    if (!zero_dim) {
      fr.status = FilterStatus::Inconclusive;
      fr.note = "positive-dimensional after torus reduction";
      // Real slices v = ~v until zero-dimensional; a consistent point there is one of the system.
      std::vector<Polynomial> sl = rest;
      std::string cut;
      for (SymId v : vars) {
        SymId cv = reg().conj(v);
        if (cv == v || cv < v || std::find(vars.begin(), vars.end(), cv) == vars.end()) continue;
        sl.push_back(Polynomial::var(v) - Polynomial::var(cv));
        cut += (cut.empty() ? "" : ", ") + reg().name(v) + " = " + reg().name(cv);
        GroebnerBasis S = buchberger(sl, lex, cfg);
        if (S.is_unit()) break;
        if (!zero_dimensional(S.gens)) continue;
        for (unsigned bits : opt.precision) {
          PointCheck pc;
          for (int attempt = 0; attempt < 3 && !pc.certified; ++attempt) pc = check_points(S.gens, vars, bits, attempt, cfg);
          if (!pc.certified) continue;
          if (pc.any_consistent) {
            fr.status = FilterStatus::Kept;
            fr.note = "conjugation-consistent point on the slice " + cut + " at " + std::to_string(bits) + " bits";
          }
          break;
        }
        break;
      }
      out.push_back(std::move(fr));
      continue;
    }
    fr.status = FilterStatus::Inconclusive;
    fr.note = "root isolation not certified";
    for (unsigned bits : opt.precision) {
      bool decided = false;
      for (int attempt = 0; attempt < 3 && !decided; ++attempt) {
        PointCheck pc = check_points(rest, vars, bits, attempt, cfg);
        if (!pc.certified) continue;
        decided = true;
        fr.status = pc.any_consistent ? FilterStatus::Kept : FilterStatus::Dropped;
        fr.note = std::string(pc.any_consistent ? "conjugation-consistent point" : "no conjugation-consistent point") +
                  " at " + std::to_string(bits) + " bits" + (torus.empty() ? "" : "; torus " + torus);
      }
      if (decided) break;
    }
    out.push_back(std::move(fr));
  }
  return out;
}

bool forces_zero(const FilterResult& r, SymId v, const GbConfig& cfg) {
  for (auto& t : r.torus)
    for (auto& [x, a] : t.terms)
      if (x == v || x == reg().conj(v)) return !torus_allows_nonzero(t, v);
  if (r.rest.empty()) return false;
  return radical_membership(Polynomial::var(v), r.rest, cfg);
}

}  // namespace hy
