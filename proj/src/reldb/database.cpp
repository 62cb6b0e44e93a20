// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "reldb/database.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace hy {

void RelationSet::add(Relation r) {
  if (rels_.count(r.name)) throw AlgebraError("duplicate relation name '" + r.name + "'");
  order_.push_back(r.name);
  std::string n = r.name;
  rels_.emplace(n, std::move(r));
  conj_cache_.erase("~" + n);
}

const Relation* RelationSet::find(const std::string& name) const {
  auto it = rels_.find(name);
  if (it != rels_.end()) return &it->second;
  if (!name.starts_with("~")) return nullptr;
  auto c = conj_cache_.find(name);
  if (c != conj_cache_.end()) return c->second.get();
  auto base = rels_.find(name.substr(1));
  if (base == rels_.end()) return nullptr;
  auto p = std::make_shared<Relation>(base->second.conjugate());
  conj_cache_[name] = p;
  return p.get();
}

const Relation& RelationSet::get(const std::string& name) const {
  const Relation* r = find(name);
  if (!r) throw AlgebraError("unknown relation '" + name + "'");
  return *r;
}

RelationSet RelationSet::with_conjugates() const {
  RelationSet out = *this;
  for (auto& n : order_) {
    if (n.starts_with("~") || rels_.count("~" + n)) continue;
    out.add(rels_.at(n).conjugate());
  }
  return out;
}

void RelationSet::replace(const std::string& name, const Fraction& value) {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw AlgebraError("unknown relation '" + name + "'");
  it->second.value = value;
  conj_cache_.clear();
}

const Gauge* Database::gauge(const std::string& name) const {
  auto it = gauges.find(name.empty() ? default_gauge : name);
  return it == gauges.end() ? nullptr : &it->second;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceError(path, "cannot open file", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct Line {
  std::string code;     // text before '#'
  std::string comment;  // text after '#', empty if none
  bool has_comment = false;
  int indent = 0;
};

Line split_line(const std::string& raw) {
  Line l;
  auto h = raw.find('#');
  l.code = h == std::string::npos ? raw : raw.substr(0, h);
  if (h != std::string::npos) {
    l.has_comment = true;
    l.comment = raw.substr(h + 1);
  }
  while (!l.code.empty() && (l.code.back() == ' ' || l.code.back() == '\t' || l.code.back() == '\r')) l.code.pop_back();
  while (l.indent < static_cast<int>(l.code.size()) && (l.code[l.indent] == ' ' || l.code[l.indent] == '\t')) ++l.indent;
  return l;
}

bool has_ref(const Line& l) {
  size_t i = 0;
  while (i < l.comment.size() && l.comment[i] == ' ') ++i;
  return l.comment.compare(i, 4, "ref:") == 0;
}

std::string first_word(const std::string& code, int from) {
  size_t e = code.find_first_of(" \t", from);
  return code.substr(from, e == std::string::npos ? std::string::npos : e - from);
}

bool needs_ref(const std::string& kw) { return kw == "rel" || kw == "poly" || kw == "comm" || kw == "set" || kw == "zero"; }

std::optional<Provenance> parse_provenance(const std::string& p, std::string* tag) {
  static const std::regex re(R"(^([a-z]+)(?:\(([^()\s]+)\))?$)");
  std::smatch m;
  if (!std::regex_match(p, m, re)) return std::nullopt;
  std::string k = m[1];
  *tag = m[2];
  bool tagged = m[2].matched;
  if (k == "appendix" && !tagged) return Provenance::Appendix;
  if (k == "paper" && !tagged) return Provenance::Paper;
  if (k == "condition" && tagged) return Provenance::Condition;
  if (k == "corrected" && tagged) return Provenance::Corrected;
  if (k == "assumption" && !tagged) return Provenance::Assumption;
  if (k == "derived") return Provenance::Derived;
  return std::nullopt;
}

// Position of the top-level '=' in an equation, or npos.
size_t find_equals(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == '=' && depth == 0) return i;
  }
  return std::string::npos;
}

class Loader {
 public:
  Loader(Database& db, const std::string& file, std::vector<LintIssue>* lint) : db_(db), file_(file), lint_(lint) {}

  void run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
      ++ln;
      line_ = ln;
      Line l = split_line(raw);
      if (l.code.size() == static_cast<size_t>(l.indent)) continue;
      std::string kw = first_word(l.code, l.indent);
      if (needs_ref(kw) && !has_ref(l)) {
        if (lint_)
          lint_->push_back({file_, ln, "declaration without a '# ref:' comment"});
        else
          fail("declaration without a '# ref:' comment", l.indent);
      }
      int rest = l.indent + static_cast<int>(kw.size());
      try {
        if (kw == "var") decl_var(l.code, rest);
        else if (kw == "rel" || kw == "poly") decl_rel(l.code, rest, kw == "poly");
        else if (kw == "comm") decl_comm(l.code, rest);
        else if (kw == "gauge") decl_gauge(l.code, rest);
        else if (kw == "set") decl_set(l.code, rest);
        else if (kw == "zero") decl_zero(l.code, rest);
        else if (kw == "ranking") decl_ranking(l.code, rest);
        else fail("unknown declaration '" + kw + "'", l.indent);
      } catch (const SourceError&) {
        throw;
      } catch (const ParseError& e) {
        throw SourceError(file_, e.what_, e.line, e.col);
      } catch (const AlgebraError& e) {
        throw SourceError(file_, e.what(), ln, l.indent + 1);
      }
    }
    db_.files.push_back(file_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col0) const { throw SourceError(file_, msg, line_, col0 + 1); }

  ExprContext ctx(int col0) const {
    ExprContext c;
    c.line = line_;
    c.col = col0 + 1;
    const Database* db = &db_;
    c.declared = [db](const std::string& id) { return db->declared.count(id) > 0; };
    c.ref = [db](const std::string& n) -> std::optional<Fraction> {
      const Relation* r = db->rels.find(n);
      if (!r) return std::nullopt;
      return r->value;
    };
    return c;
  }

  std::vector<std::pair<std::string, int>> words(const std::string& code, int from) const {
    std::vector<std::pair<std::string, int>> out;
    size_t i = from;
    while (i < code.size()) {
      while (i < code.size() && (code[i] == ' ' || code[i] == '\t')) ++i;
      if (i >= code.size()) break;
      size_t j = i;
      while (j < code.size() && code[j] != ' ' && code[j] != '\t') ++j;
      out.push_back({code.substr(i, j - i), static_cast<int>(i)});
      i = j;
    }
    return out;
  }

  void decl_var(const std::string& code, int from) {
    auto ws = words(code, from);
    if (ws.empty()) fail("expected variable names", from);
    static const std::regex id(R"(^[A-Za-z_][A-Za-z0-9_]*$)");
    for (auto& [w, c] : ws) {
      if (!std::regex_match(w, id)) fail("bad variable name '" + w + "'", c);
      if (reg().is_np_scalar_name(w)) fail("'" + w + "' is a reserved scalar name", c);
      SymId s = reg().intern(w, SymbolKind::XVariable);
      db_.declared.insert(reg().name(s));
      db_.declared.insert(reg().name(reg().conj(s)));
    }
  }

  void decl_ranking(const std::string& code, int from) {
    auto ws = words(code, from);
    if (ws.empty()) fail("expected variable names", from);
    db_.ranking.clear();
    for (auto& [w, c] : ws) db_.ranking.push_back(w);
  }

  void decl_rel(const std::string& code, int from, bool is_poly) {
    size_t colon = code.find(':', from);
    if (colon == std::string::npos) fail("expected ':'", static_cast<int>(code.size()));
    auto head = words(code.substr(0, colon), from);
    if (head.size() != 2) fail("expected 'NAME PROVENANCE:'", from);
    Relation r;
    r.name = head[0].first;
    r.line = line_;
    r.declares_poly = is_poly;
    static const std::regex name_re(R"(^[A-Za-z0-9_.\-]+$)");
    if (!std::regex_match(r.name, name_re)) fail("bad relation name '" + r.name + "'", head[0].second);
    auto prov = parse_provenance(head[1].first, &r.tag);
    if (!prov) fail("unknown provenance '" + head[1].first + "'", head[1].second);
    r.provenance = *prov;
    if (r.provenance == Provenance::Corrected && !db_.rels.contains(r.tag))
      fail("corrected form of unknown relation '" + r.tag + "'", head[1].second);
    int body_col = static_cast<int>(colon) + 1;
    std::string body = code.substr(colon + 1);
    if (body.find_first_not_of(" \t") == std::string::npos) fail("empty relation body", body_col);
    if (is_poly) {
      if (find_equals(body) != std::string::npos) fail("'poly' declarations take an expression, not an equation", body_col);
      r.value = parse_fraction(body, ctx(body_col)).cancelled();
    } else {
      size_t eq = find_equals(body);
      if (eq == std::string::npos) fail("expected '=' in relation", body_col + static_cast<int>(body.size()));
      Fraction l = parse_fraction(body.substr(0, eq), ctx(body_col));
      Fraction rhs = parse_fraction(body.substr(eq + 1), ctx(body_col + static_cast<int>(eq) + 1));
      r.value = (l - rhs).cancelled();
      if (l.is_polynomial() && l.num().size() == 1 && l.num().lead().c == 1 && l.num().lead().m.degree() == 1)
        r.lhs = l.num().lead().m.entries()[0].first;
    }
    if (db_.rels.contains(r.name) && db_.rels.find(r.name)->name == r.name)
      fail("duplicate relation name '" + r.name + "'", head[0].second);
    db_.rels.add(std::move(r));
  }

  void decl_comm(const std::string& code, int from) {
    static const std::regex re(R"(^\s*\[\s*([A-Za-z]+)\s*,\s*([A-Za-z]+)\s*\]\s*:(.*)$)");
    std::smatch m;
    std::string rest = code.substr(from);
    if (!std::regex_match(rest, m, re)) fail("expected 'comm [A,B]: expression'", from);
    auto a = op_from_token(m[1].str()), b = op_from_token(m[2].str());
    if (!a) fail("unknown operator '" + m[1].str() + "'", from);
    if (!b) fail("unknown operator '" + m[2].str() + "'", from);
    if (*a == *b) fail("commutator of an operator with itself", from);
    ExprContext c = ctx(from + static_cast<int>(m.position(3)));
    c.op_markers = true;
    Polynomial p = parse_expr(m[3].str(), c);
    db_.rules.add(*a, *b, split_op_markers(p));
  }

  void decl_gauge(const std::string& code, int from) {
    auto ws = words(code, from);
    if (ws.size() != 1) fail("expected 'gauge NAME'", from);
    if (db_.gauges.count(ws[0].first)) fail("duplicate gauge '" + ws[0].first + "'", ws[0].second);
    gauge_ = ws[0].first;
    db_.gauges[gauge_].name = gauge_;
    if (db_.default_gauge.empty()) db_.default_gauge = gauge_;
  }

  Gauge& current(int col) {
    if (gauge_.empty()) fail("'set'/'zero' outside a gauge block", col);
    return db_.gauges[gauge_];
  }

  void decl_set(const std::string& code, int from) {
    Gauge& g = current(from);
    size_t eq = code.find('=', from);
    if (eq == std::string::npos) fail("expected 'set NAME = constant'", from);
    auto ws = words(code.substr(0, eq), from);
    if (ws.size() != 1) fail("expected a single scalar name", from);
    auto s = reg().find(ws[0].first);
    if (!s || reg().get(*s).kind != SymbolKind::NpScalar) fail("unknown scalar '" + ws[0].first + "'", ws[0].second);
    Polynomial v = parse_expr(code.substr(eq + 1), ctx(static_cast<int>(eq) + 1));
    auto c = v.constant_value();
    if (!c) fail("gauge values must be constants", static_cast<int>(eq) + 1);
    g.set(*s, *c);
  }

  void decl_zero(const std::string& code, int from) {
    Gauge& g = current(from);
    Polynomial p = parse_expr(code.substr(from), ctx(from));
    if (p.size() != 1 || p.lead().c != 1 || p.lead().m.degree() != 1) fail("expected a derivative atom", from);
    SymId s = p.lead().m.entries()[0].first;
    if (reg().get(s).kind != SymbolKind::DerivAtom) fail("expected a derivative atom", from);
    g.zero(s);
  }

  Database& db_;
  std::string file_;
  std::vector<LintIssue>* lint_;
  int line_ = 0;
  std::string gauge_;
};

}  // namespace

void load_text(Database& db, const std::string& text, const std::string& file, std::vector<LintIssue>* lint) {
  Loader(db, file, lint).run(text);
}

void load_file(Database& db, const std::string& path, std::vector<LintIssue>* lint) {
  load_text(db, read_file(path), path, lint);
}

std::vector<LintIssue> lint_text(const std::string& text, const std::string& file) {
  std::vector<LintIssue> out;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    Line l = split_line(raw);
    if (l.code.size() == static_cast<size_t>(l.indent)) continue;
    if (needs_ref(first_word(l.code, l.indent)) && !has_ref(l))
      out.push_back({file, ln, "declaration without a '# ref:' comment"});
  }
  return out;
}

}  // namespace hy
