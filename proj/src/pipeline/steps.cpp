// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "pipeline/steps.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "np/commutator.hpp"
#include "np/pfaffian.hpp"
#include "np/solve.hpp"
#include "reldb/expr.hpp"
#include "reldb/render.hpp"

namespace hy {

const char* step_status_name(StepStatus s) {
  switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Fail: return "fail";
    case StepStatus::Inconclusive: return "inconclusive";
    case StepStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

struct DryRun {};

std::string brief(const std::string& s, size_t n = 160) {
  return s.size() <= n ? s : s.substr(0, n) + "...";
}

std::string brief(const Polynomial& p) {
  std::string s = render(p);
  return s.size() <= 160 ? s : "(" + std::to_string(p.size()) + " terms)";
}

class Ctx {
 public:
  Ctx(const ProofStep& st, const ProofScript& sc, const Database& db, int mode, const StepOptions& opt, bool dry)
      : step(st), script(sc), db(db), mode(mode), opt(opt), dry(dry) {
    const std::string& g = st.get("gauge");
    if (g == "none") {
      gauge = nullptr;
    } else {
      gauge = db.gauge(g);
      if (!g.empty() && !gauge) throw AlgebraError("unknown gauge '" + g + "'");
    }
  }

  const ProofStep& step;
  const ProofScript& script;
  const Database& db;
  int mode;
  const StepOptions& opt;
  bool dry;
  const Gauge* gauge = nullptr;
  Outcome out;

  void stop_if_dry() const {
    if (dry) throw DryRun{};
  }

  std::string field(const std::string& key) const { return choose(step.get(key)); }

  std::string choose(const std::string& text) const {
    static const std::regex alt(R"(([^\s,\[\]|()]+)\|([^\s,\[\]|()]+))");
    return std::regex_replace(text, alt, mode == 0 ? "$1" : "$2");
  }

  bool is_relation(std::string name) const {
    name = trim(name);
    if (auto at = name.find('@'); at != std::string::npos) name = name.substr(0, at);
    return db.rels.contains(name);
  }

  const Relation& relation(const std::string& name) {
    const Relation* r = db.rels.find(name);
    if (!r) throw AlgebraError("unknown relation '" + name + "'");
    std::string base = name.starts_with("~") ? name.substr(1) : name;
    if (r->provenance == Provenance::Corrected) {
      note_use("corrected form " + base + " (printed " + r->tag + ")");
    } else if (r->provenance == Provenance::Assumption) {
      note_use("assumption " + base);
    }
    return *r;
  }

  // "NAME", "~NAME", "NAME@SYM": gauge-specialized value, or the solved value of SYM.
  Fraction rel_value(const std::string& text) {
    std::string name = trim(text);
    std::string sym;
    if (auto at = name.find('@'); at != std::string::npos) {
      sym = name.substr(at + 1);
      name = name.substr(0, at);
    }
    const Relation& r = relation(name);
    Fraction v = gauge ? gauge->specialize(r.value) : r.value;
    if (sym.empty()) return v;
    SymId s = symbol(sym);
    if (dry) return v;
    Solved sol = solve_for_atom(v, s);
    if (sol.nonzero && !sol.nonzero->is_constant()) note("nonzero: " + brief(*sol.nonzero) + " (solving " + text + ")");
    return sol.value;
  }

  ExprContext expr_ctx() {
    ExprContext c;
    c.declared = [this](const std::string& n) { return db.declared.count(n) > 0; };
    c.ref = [this](const std::string& n) -> std::optional<Fraction> { return rel_value(n); };
    c.line = step.line;
    return c;
  }

  Fraction expr(const std::string& text) { return parse_fraction(text, expr_ctx()); }

  Polynomial poly_expr(const std::string& text) {
    Fraction f = expr(text).cancelled();
    if (!f.is_polynomial()) throw AlgebraError("expected a polynomial: " + text);
    return f.num();
  }

  // A relation reference or an expression.
  Fraction item(const std::string& text) { return is_relation(text) ? rel_value(text) : expr(text); }

  std::vector<Fraction> items(const std::string& key) {
    std::vector<Fraction> v;
    for (auto& s : split_list(field(key))) v.push_back(item(s));
    return v;
  }

  SymId symbol(const std::string& text) {
    Polynomial p = parse_expr(text, expr_ctx());
    if (p.size() != 1 || p.lead().c != 1 || p.lead().m.entries().size() != 1 || p.lead().m.degree() != 1)
      throw AlgebraError("expected a symbol: " + text);
    return p.lead().m.entries()[0].first;
  }

  std::map<SymId, Fraction> substitution(const std::string& key) {
    std::string text = field(key);
    std::map<SymId, Fraction> m;
    for (auto& a : split_list(text)) {
      auto eq = a.find('=');
      if (eq == std::string::npos) throw AlgebraError("expected 'sym = expr' in map: " + a);
      SymId s = symbol(a.substr(0, eq));
      if (m.count(s)) throw AlgebraError("symbol mapped twice: " + a);
      m[s] = expr(a.substr(eq + 1));
    }
    return m;
  }

  std::vector<SymId> ranking(const std::vector<Polynomial>& ps) const {
    std::vector<std::string> names = step.has("ranking") ? split_list(field("ranking"), ' ') : script.ranking;
    std::set<SymId> present;
    for (auto& p : ps)
      for (SymId s : p.variables()) present.insert(s);
    std::vector<SymId> r;
    for (auto& n : names)
      if (auto s = reg().find(n); s && present.count(*s) && std::find(r.begin(), r.end(), *s) == r.end()) r.push_back(*s);
    for (SymId s : default_ranking(ps))
      if (std::find(r.begin(), r.end(), s) == r.end()) r.push_back(s);
    return r;
  }

  std::vector<SymId> ranking_names() const {
    std::vector<std::string> names = step.has("ranking") ? split_list(field("ranking"), ' ') : script.ranking;
    std::vector<SymId> r;
    for (auto& n : names)
      if (auto s = reg().find(n)) r.push_back(*s);
    return r;
  }

  // Normal form of the primitive part of p modulo the numerators of `key`.
  Polynomial reduce_modulo(const Polynomial& p, const std::vector<Polynomial>& ideal) {
    if (ideal.empty() || p.is_zero()) return p;
    std::vector<Polynomial> all = ideal;
    all.push_back(p);
    MonomialOrder o = MonomialOrder::grevlex(ranking(all));
    GroebnerBasis G = buchberger(ideal, o, opt.gb);
    return normal_form(p, G.gens, o);
  }

  std::vector<Polynomial> modulo() {
    std::vector<Polynomial> v;
    if (!step.has("modulo")) return v;
    for (auto& f : items("modulo")) v.push_back(factor_out(f.cancelled().num()).primitive);
    return v;
  }

  void note(const std::string& s) {
    if (std::find(out.notes.begin(), out.notes.end(), s) == out.notes.end()) out.notes.push_back(s);
  }

  void note_use(const std::string& s) {
    if (std::find(out.corrections.begin(), out.corrections.end(), s) == out.corrections.end())
      out.corrections.push_back(s);
  }

  void verdict(bool ok) { out.status = ok ? StepStatus::Pass : StepStatus::Fail; }

  // Leading word of "expect" and the remainder.
  std::pair<std::string, std::string> expect() const {
    std::string e = field("expect");
    auto sp = e.find(' ');
    if (sp == std::string::npos) return {e, ""};
    return {e.substr(0, sp), trim(e.substr(sp + 1))};
  }
};

[[noreturn]] void bad_expect(const Ctx& c) {
  throw AlgebraError("unsupported expect '" + c.field("expect") + "' for " + step_kind_name(c.step.kind));
}

// "X by Y"
std::pair<std::string, std::string> split_by(const std::string& s) {
  auto p = s.find(" by ");
  if (p == std::string::npos) return {trim(s), ""};
  return {trim(s.substr(0, p)), trim(s.substr(p + 4))};
}

void run_specialize(Ctx& c) {
  Fraction v = c.item(c.field("input")).cancelled();
  auto [w, rest] = c.expect();
  std::optional<Fraction> target;
  if (w == "proportional") target = c.item(rest).cancelled();
  else if (w != "zero") bad_expect(c);
  c.stop_if_dry();
  c.out.witness = render(v);
  if (!target) return c.verdict(v.is_zero());
  auto k = proportional(v.num(), target->num());
  if (k) c.note("factor " + render(*k));
  c.verdict(k && *k != 0);
}

void run_pfaffian(Ctx& c) {
  std::vector<std::string> names = split_list(c.field("sources"));
  std::vector<Polynomial> src;
  for (auto& n : names) src.push_back(c.item(n).cancelled().num());
  auto [w, rest] = c.expect();
  if (w != "span") bad_expect(c);
  Polynomial target = c.item(rest).cancelled().num();
  c.stop_if_dry();
  auto co = rational_span(target, src);
  if (!co) {
    c.out.witness = "not in span; target " + render(target);
    return c.verdict(false);
  }
  std::ostringstream ws;
  for (size_t i = 0; i < names.size(); ++i) ws << (i ? "; " : "") << names[i] << ": " << render((*co)[i]);
  c.out.witness = ws.str();
  c.verdict(true);
}

struct CommTerm {
  Rational coef;
  DerivOp a, b;
  Fraction f;
};

std::vector<CommTerm> comm_terms(Ctx& c) {
  static const std::regex re(R"(^([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*(.+)$)");
  std::vector<CommTerm> v;
  for (auto& t : split_list(c.field("terms"))) {
    std::smatch m;
    if (!std::regex_match(t, m, re)) throw AlgebraError("expected '[A,B] expr' in terms: " + t);
    CommTerm ct;
    ct.coef = m[2].matched ? Rational(m[2].str()) : Rational(1);
    ct.coef.canonicalize();
    if (m[1] == "-") ct.coef = -ct.coef;
    auto a = op_from_token(m[3].str()), b = op_from_token(m[4].str());
    if (!a || !b) throw AlgebraError("unknown operator in " + t);
    ct.a = *a;
    ct.b = *b;
    ct.f = c.expr(m[5].str());
    v.push_back(ct);
  }
  return v;
}

PfaffianTable build_table(Ctx& c) {
  PfaffianTable t;
  for (auto& item : split_list(c.field("table"))) {
    std::string name = item, sym;
    if (auto at = item.find('@'); at != std::string::npos) {
      name = item.substr(0, at);
      sym = item.substr(at + 1);
    }
    const Relation& r = c.relation(name);
    SymId atom;
    if (!sym.empty()) {
      atom = c.symbol(sym);
    } else if (r.lhs) {
      atom = *r.lhs;
    } else {
      throw AlgebraError("table relation " + name + " has no single-atom left side");
    }
    Fraction v = c.gauge ? c.gauge->specialize(r.value) : r.value;
    if (c.dry) continue;
    if (t.contains(atom)) throw AlgebraError("atom tabulated twice: " + reg().name(atom));
    t.insert(atom, solve_for_atom(v, atom).value);
  }
  if (c.gauge)
    for (SymId a : c.gauge->zeros())
      if (!t.contains(a)) t.insert(a, Fraction(0));
  if (!c.dry) t.close();
  return t;
}

Fraction apply_side(Ctx& c, Fraction f) {
  if (!c.step.has("side")) return f;
  for (auto& item : split_list(c.field("side"))) {
    auto at = item.find('@');
    if (at == std::string::npos) throw AlgebraError("side entries take the form NAME@SYM: " + item);
    SymId s = c.symbol(item.substr(at + 1));
    Fraction v = c.rel_value(item);
    if (c.dry) continue;
    f = f.substitute({{s, v}}).cancelled();
  }
  return f;
}

void run_commutator(Ctx& c) {
  auto terms = comm_terms(c);
  PfaffianTable t = build_table(c);
  auto [w, rest] = c.expect();
  std::vector<Polynomial> mod = c.modulo();
  std::optional<SymId> solve_atom;
  std::optional<Fraction> target;
  if (w == "solve") {
    static const std::regex re(R"(^(\S+)\s+equal\s+(\S+)$)");
    std::smatch m;
    if (!std::regex_match(rest, m, re)) bad_expect(c);
    solve_atom = c.symbol(m[1]);
    target = c.item(m[2]);
  } else if (w == "equal") {
    target = c.item(rest);
  } else if (w != "zero") {
    bad_expect(c);
  }
  apply_side(c, Fraction(0));
  c.stop_if_dry();
  c.note("table: " + std::to_string(t.size()) + " atoms");
  Fraction res(0);
  for (auto& ct : terms)
    res = res + Fraction(Polynomial(ct.coef)) * commutator_residual(ct.a, ct.b, ct.f, t, c.db.rules, c.gauge);
  res = apply_side(c, res.cancelled());
  if (solve_atom) {
    Solved got = solve_for_atom(res, *solve_atom);
    Fraction want = solve_for_atom(*target, *solve_atom).value;
    Fraction diff = apply_side(c, (got.value - want).cancelled());
    Polynomial r = diff.is_zero() ? diff.num() : c.reduce_modulo(factor_out(diff.num()).primitive, mod);
    c.out.witness = reg().name(*solve_atom) + " = " + render(got.value) + "\ndifference: " + render(r);
    return c.verdict(r.is_zero());
  }
  if (target) {
    Fraction tv = apply_side(c, target->cancelled());
    auto k = proportional(res.num(), tv.num());
    c.out.witness = render(res);
    if (k) c.note("factor " + render(*k));
    return c.verdict(k && *k != 0);
  }
  Polynomial r = res.num().is_zero() ? res.num() : c.reduce_modulo(factor_out(res.num()).primitive, mod);
  c.out.witness = "residual: " + render(res) + "\nnormal form: " + render(r);
  if (!r.is_zero()) c.note("residual has " + std::to_string(r.size()) + " terms");
  c.verdict(r.is_zero());
}

void run_solve(Ctx& c) {
  Fraction v = c.item(c.field("input"));
  SymId a = c.symbol(c.field("atom"));
  auto [w, rest] = c.expect();
  if (w != "equal") bad_expect(c);
  Fraction e = c.expr(rest);
  c.stop_if_dry();
  Solved s = solve_for_atom(v, a);
  if (s.nonzero) c.note("nonzero: " + brief(*s.nonzero));
  Fraction d = (s.value - e).cancelled();
  c.out.witness = reg().name(a) + " = " + render(s.value);
  c.verdict(d.is_zero());
}

void run_eliminate(Ctx& c) {
  auto in = c.items("input");
  if (in.size() != 2) throw AlgebraError("eliminate-check takes two inputs");
  std::vector<SymId> atoms;
  for (auto& a : split_list(c.field("atoms"))) atoms.push_back(c.symbol(a));
  auto [w, rest] = c.expect();
  if (w != "proportional") bad_expect(c);
  Fraction target = c.item(rest);
  c.stop_if_dry();
  Polynomial e = eliminate_atom(in[0].cancelled().num(), in[1].cancelled().num(), atoms);
  c.out.witness = render(e);
  auto k = proportional(e, factor_out(target.cancelled().num()).primitive);
  if (k) c.note("factor " + render(*k));
  c.verdict(k && *k != 0);
}

void run_homogenize(Ctx& c) {
  Fraction in = c.item(c.field("input"));
  auto sub = c.substitution("map");
  auto [w, rest] = c.expect();
  if (w != "equal" && w != "multiple") bad_expect(c);
  auto [tname, by] = split_by(rest);
  Polynomial target = c.item(tname).cancelled().num();
  if (!by.empty()) target = target * c.poly_expr(by);
  c.stop_if_dry();
  Fraction v = in.substitute(sub).cancelled();
  c.out.witness = render(v);
  if (!v.is_polynomial()) {
    c.note("substituted value keeps a denominator");
    return c.verdict(false);
  }
  if (w == "equal") return c.verdict(v.num() == target);
  auto k = proportional(v.num(), target);
  if (k) c.note("factor " + render(*k));
  c.verdict(k && *k != 0);
}

std::vector<Polynomial> numerators(const std::vector<Fraction>& fs) {
  std::vector<Polynomial> v;
  for (auto& f : fs) v.push_back(f.cancelled().num());
  return v;
}

std::string render_system(const TriangularSystem& t) {
  GroebnerBasis g;
  g.gens = t.gens;
  g.order = t.order;
  return render(g);
}

std::string systems_text(const std::vector<FilterResult>& rs) {
  std::ostringstream ws;
  for (auto& r : rs) {
    ws << "{" << render_system(r.system) << "} " << filter_status_name(r.status);
    if (!r.note.empty()) ws << " (" << r.note << ")";
    ws << "\n";
  }
  return ws.str();
}

void run_triviality(Ctx& c) {
  auto gens = numerators(c.items("input"));
  std::vector<Polynomial> sat;
  if (c.step.has("saturate"))
    for (auto& s : split_list(c.field("saturate"))) sat.push_back(c.poly_expr(s));
  if (c.field("expect") != "unit") bad_expect(c);
  c.stop_if_dry();
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), sat.begin(), sat.end());
  MonomialOrder o = MonomialOrder::grevlex(c.ranking(all));
  GroebnerBasis G = buchberger(gens, o, c.opt.gb);
  for (auto& h : sat) {
    c.note("branch: " + render(h) + " != 0");
    if (G.is_unit()) break;
    G = saturate(G.gens, h, o, c.opt.gb);
  }
  c.out.witness = render(G);
  c.note("basis size " + std::to_string(G.gens.size()) + ", peak coefficient bits " + std::to_string(G.stats.max_bits));
  c.verdict(G.is_unit());
}

void run_groebner(Ctx& c) {
  auto gens = numerators(c.items("input"));
  std::vector<Polynomial> nz;
  if (c.step.has("nonzero"))
    for (auto& s : split_list(c.field("nonzero"))) nz.push_back(c.poly_expr(s));
  auto [w, rest] = c.expect();
  if (w != "variety") bad_expect(c);
  std::vector<Polynomial> E;
  for (auto& n : split_list(rest)) E.push_back(c.item(n).cancelled().num());
  c.stop_if_dry();
  for (auto& h : nz) c.note("branch: " + render(h) + " != 0");
  GroebnerBasis J;
  auto systems = gsolve(gens, nz, {c.ranking_names()}, c.opt.gb, &J);
  bool e_in_j = true, j_in_e = true;
  for (auto& e : E) e_in_j = e_in_j && radical_membership(e, J.gens, c.opt.gb);
  for (auto& j : J.gens) j_in_e = j_in_e && radical_membership(j, E, c.opt.gb);
  c.note(std::string("expected variety contains the solution set: ") + (j_in_e ? "yes" : "no"));
  c.note(std::string("solution set contains the expected variety: ") + (e_in_j ? "yes" : "no"));
  auto rs = conjugation_filter(systems, c.opt.filter, c.opt.gb);
  size_t kept = 0;
  bool unsure = false, kept_ok = true;
  for (auto& r : rs) {
    if (r.status == FilterStatus::Inconclusive) unsure = true;
    if (r.status != FilterStatus::Kept) continue;
    kept++;
    for (auto& e : E) kept_ok = kept_ok && radical_membership(e, r.system.gens, c.opt.gb);
  }
  c.out.witness = "saturated basis: " + render(J) + "\nsystems:\n" + systems_text(rs);
  c.note(std::to_string(rs.size()) + " systems, " + std::to_string(kept) + " conjugation-consistent");
  if (!e_in_j || !j_in_e || !kept_ok || kept == 0) return c.verdict(false);
  c.out.status = unsure ? StepStatus::Inconclusive : StepStatus::Pass;
}

void run_filter(Ctx& c) {
  auto gens = numerators(c.items("input"));
  std::vector<Polynomial> nz;
  if (c.step.has("nonzero"))
    for (auto& s : split_list(c.field("nonzero"))) nz.push_back(c.poly_expr(s));
  std::vector<SymId> vanish;
  for (auto& v : split_list(c.field("vanish"))) vanish.push_back(c.symbol(v));
  if (c.step.has("expect") && c.field("expect") != "vanish") bad_expect(c);
  c.stop_if_dry();
  auto systems = gsolve(gens, nz, {c.ranking_names()}, c.opt.gb);
  auto rs = conjugation_filter(systems, c.opt.filter, c.opt.gb);
  bool unsure = false, ok = true;
  std::ostringstream ws;
  ws << systems_text(rs);
  for (auto& r : rs) {
    if (r.status == FilterStatus::Inconclusive) unsure = true;
    if (r.status != FilterStatus::Kept) continue;
    for (SymId v : vanish) {
      bool z = forces_zero(r, v, c.opt.gb);
      if (!z) {
        ok = false;
        c.note("consistent solution with " + reg().name(v) + " != 0: {" + brief(render_system(r.system)) + "}");
      }
    }
  }
  c.out.witness = ws.str();
  c.note(std::to_string(rs.size()) + " systems");
  if (!ok) return c.verdict(false);
  c.out.status = unsure ? StepStatus::Inconclusive : StepStatus::Pass;
}

void run_substitution(Ctx& c) {
  Fraction in = c.item(c.field("input"));
  std::map<SymId, Fraction> sub;
  if (c.step.has("map")) sub = c.substitution("map");
  std::vector<Polynomial> mod = c.modulo();
  auto [w, rest] = c.expect();
  std::vector<Polynomial> factors;
  std::optional<Polynomial> target;
  if (w == "factors") {
    for (auto& f : split_list(rest)) factors.push_back(c.poly_expr(f));
  } else if (w == "proportional" || w == "numerator" || w == "denominator") {
    target = c.item(rest).cancelled().num();
  } else if (w != "zero") {
    bad_expect(c);
  }
  c.stop_if_dry();
  Fraction v = (sub.empty() ? in : in.substitute(sub)).cancelled();
  Polynomial n = v.num();
  if (w == "numerator" || w == "denominator") {
    // Up to rational and monomial factors.
    Polynomial part = factor_out(w == "numerator" ? n : v.den_poly()).primitive;
    c.out.witness = render(part);
    auto k = proportional(part, factor_out(*target).primitive);
    if (k) c.note("factor " + render(*k));
    return c.verdict(k && *k != 0);
  }
  if (w == "zero") {
    Polynomial r = n.is_zero() ? n : c.reduce_modulo(factor_out(n).primitive, mod);
    c.out.witness = "value: " + render(v) + "\nnormal form: " + render(r);
    return c.verdict(r.is_zero());
  }
  c.out.witness = render(v);
  if (target) {
    auto k = proportional(n, *target);
    if (k) c.note("factor " + render(*k));
    return c.verdict(k && *k != 0);
  }
  Polynomial q = n;
  for (auto& f : factors) {
    auto d = q.divide_exact(f);
    if (!d) {
      c.note("not divisible by " + render(f));
      return c.verdict(false);
    }
    q = *d;
  }
  auto k = q.constant_value();
  std::ostringstream ws;
  ws << render(n) << "\n= " << (k ? render(*k) : "(" + render(q) + ")");
  for (auto& f : factors) ws << " * (" << render(f) << ")";
  c.out.witness = ws.str();
  if (!k) c.note("cofactor is not constant: " + brief(q));
  c.verdict(k && *k != 0);
}

void dispatch(Ctx& c) {
  switch (c.step.kind) {
    case StepKind::Specialize: return run_specialize(c);
    case StepKind::Pfaffian: return run_pfaffian(c);
    case StepKind::Commutator: return run_commutator(c);
    case StepKind::Solve: return run_solve(c);
    case StepKind::Eliminate: return run_eliminate(c);
    case StepKind::Homogenize: return run_homogenize(c);
    case StepKind::Groebner: return run_groebner(c);
    case StepKind::Triviality: return run_triviality(c);
    case StepKind::Filter: return run_filter(c);
    case StepKind::Substitution: return run_substitution(c);
    case StepKind::Skip: return;
  }
}

}  // namespace

Outcome run_step(const ProofStep& step, const ProofScript& script, const Database& db, int mode,
                 const StepOptions& opt) {
  Ctx c(step, script, db, mode, opt, false);
  if (step.kind == StepKind::Skip) {
    c.out.status = StepStatus::Skipped;
    return c.out;
  }
  try {
    dispatch(c);
  } catch (const ResourceError& e) {
    c.out.status = StepStatus::Inconclusive;
    c.out.witness.clear();
    c.note(e.what());
  } catch (const AlgebraError& e) {
    c.out.status = StepStatus::Fail;
    c.note(std::string("algebra error: ") + e.what());
  }
  return c.out;
}

void validate_step(const ProofStep& step, const ProofScript& script, const Database& db, int mode) {
  StepOptions opt;
  Ctx c(step, script, db, mode, opt, true);
  try {
    dispatch(c);
  } catch (const DryRun&) {
  }
}

}  // namespace hy
