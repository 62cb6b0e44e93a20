// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "reldb/polyfile.hpp"

#include <filesystem>
#include <sstream>

#include "reldb/expr.hpp"

namespace hy {

PolySystem parse_poly_system(const std::string& text, const std::string& file) {
  PolySystem s;
  s.file = file;
  std::string dir = std::filesystem::path(file).parent_path().string();
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::string code = raw.substr(0, raw.find('#'));
    size_t a = code.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = code.find_last_not_of(" \t\r");
    code = code.substr(a, b - a + 1);
    std::istringstream ws(code);
    std::string kw;
    ws >> kw;
    if (kw == "load") {
      std::string f;
      while (ws >> f) {
        std::filesystem::path p(f);
        if (p.is_relative() && !dir.empty()) p = std::filesystem::path(dir) / p;
        load_file(s.db, p.string());
      }
    } else if (kw == "var") {
      std::string v;
      while (ws >> v) {
        if (v.back() == ',') v.pop_back();
        SymId id = reg().intern(v);
        s.db.declared.insert(reg().name(id));
        s.db.declared.insert(reg().name(reg().conj(id)));
      }
    } else if (kw == "ranking") {
      std::string v;
      while (ws >> v) s.ranking.push_back(v);
    } else {
      ExprContext c;
      c.line = ln;
      c.col = static_cast<int>(a) + 1;
      const Database* db = &s.db;
      c.declared = [db](const std::string& id) { return db->declared.count(id) > 0; };
      c.ref = [db](const std::string& n) -> std::optional<Fraction> {
        const Relation* r = db->rels.find(n);
        if (!r) return std::nullopt;
        return r->value;
      };
      try {
        Fraction f = parse_equation(code, c).cancelled();
        s.gens.push_back(f.num());
        s.lines.push_back(ln);
      } catch (const ParseError& e) {
        throw SourceError(file, e.what_, e.line, e.col);
      }
    }
  }
  for (auto& r : s.ranking)
    if (!reg().find(r)) throw SourceError(file, "ranking names an unknown symbol '" + r + "'", 0, 0);
  return s;
}

PolySystem load_poly_system(const std::string& path) { return parse_poly_system(read_file(path), path); }

}  // namespace hy
