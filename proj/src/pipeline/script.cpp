// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "pipeline/script.hpp"

#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "pipeline/steps.hpp"

namespace hy {

namespace {

const std::pair<StepKind, const char*> kKinds[] = {
    {StepKind::Specialize, "specialize-check"},
    {StepKind::Pfaffian, "pfaffian-check"},
    {StepKind::Commutator, "commutator-check"},
    {StepKind::Solve, "solve-check"},
    {StepKind::Eliminate, "eliminate-check"},
    {StepKind::Homogenize, "homogenize-check"},
    {StepKind::Groebner, "groebner-check"},
    {StepKind::Triviality, "triviality-check"},
    {StepKind::Filter, "filter-check"},
    {StepKind::Substitution, "assert-substitution"},
    {StepKind::Skip, "skip"},
};

// Keys accepted by every step.
const std::set<std::string> kCommon = {"ref", "after", "note", "gauge"};

std::set<std::string> allowed_keys(StepKind k) {
  switch (k) {
    case StepKind::Specialize: return {"input", "expect"};
    case StepKind::Pfaffian: return {"sources", "expect"};
    case StepKind::Commutator: return {"terms", "table", "side", "modulo", "expect"};
    case StepKind::Solve: return {"input", "atom", "expect"};
    case StepKind::Eliminate: return {"input", "atoms", "expect"};
    case StepKind::Homogenize: return {"input", "map", "expect"};
    case StepKind::Groebner: return {"input", "nonzero", "ranking", "expect"};
    case StepKind::Triviality: return {"input", "saturate", "ranking", "expect"};
    case StepKind::Filter: return {"input", "nonzero", "ranking", "vanish", "expect"};
    case StepKind::Substitution: return {"input", "map", "modulo", "ranking", "expect"};
    case StepKind::Skip: return {};
  }
  return {};
}

std::set<std::string> required_keys(StepKind k) {
  switch (k) {
    case StepKind::Skip: return {"note"};
    case StepKind::Pfaffian: return {"sources", "expect"};
    case StepKind::Commutator: return {"terms", "table", "expect"};
    case StepKind::Solve: return {"input", "atom", "expect"};
    case StepKind::Eliminate: return {"input", "atoms", "expect"};
    case StepKind::Filter: return {"input", "vanish"};
    default: return {"input", "expect"};
  }
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) { throw SourceError(file, msg, line, 1); }

}  // namespace

const char* step_kind_name(StepKind k) {
  for (auto& [kk, n] : kKinds)
    if (kk == k) return n;
  return "?";
}

const std::string& ProofStep::get(const std::string& key) const {
  static const std::string empty;
  auto it = fields.find(key);
  return it == fields.end() ? empty : it->second.value;
}

bool ProofStep::dual() const {
  for (auto& [k, f] : fields)
    if (k != "ref" && k != "note" && f.value.find('|') != std::string::npos) return true;
  return false;
}

const ProofStep* ProofScript::find(const std::string& id) const {
  for (auto& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') depth++;
    if (c == ')' || c == ']') depth--;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

ProofScript parse_script(const std::string& text, const std::string& file) {
  ProofScript s;
  s.file = file;
  s.dir = std::filesystem::path(file).parent_path().string();
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  ProofStep* cur = nullptr;
  static const std::regex step_re(R"(^step\s+(\S+)\s+(\S+)\s*$)");
  static const std::regex key_re(R"(^\s+([a-z][a-z-]*):\s*(.*)$)");
  static const std::regex let_re(R"(^let\s+([A-Za-z_]\w*)\s*=\s*(.+)$)");
  static const std::regex use_re(R"(\$([A-Za-z_]\w*))");
  auto expand = [&](const std::string& v) {
    std::string out;
    size_t last = 0;
    for (std::sregex_iterator it(v.begin(), v.end(), use_re), end; it != end; ++it) {
      auto d = s.macros.find((*it)[1]);
      if (d == s.macros.end()) fail(file, ln, "undefined name '$" + (*it)[1].str() + "'");
      out += v.substr(last, it->position() - last) + d->second;
      last = it->position() + it->length();
    }
    return out + v.substr(last);
  };
  std::set<std::string> ids;
  while (std::getline(in, raw)) {
    ln++;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (trim(line).empty()) continue;
    std::smatch m;
    if (line[0] == ' ' || line[0] == '\t') {
      if (!cur) fail(file, ln, "indented line outside a step");
      if (!std::regex_match(line, m, key_re)) fail(file, ln, "expected 'key: value'");
      std::string key = m[1];
      if (cur->fields.count(key)) fail(file, ln, "duplicate key '" + key + "'");
      std::string value = key == "ref" || key == "note" ? trim(m[2]) : expand(trim(m[2]));
      cur->fields[key] = {value, ln};
      if (key == "ref") cur->ref = value;
      if (key == "after")
        for (auto& d : split_list(value)) cur->after.push_back(d);
      continue;
    }
    cur = nullptr;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "load") {
      std::string f;
      while (ls >> f) s.loads.push_back(f);
    } else if (word == "ranking") {
      std::string f;
      while (ls >> f) s.ranking.push_back(f);
    } else if (word == "let") {
      if (!std::regex_match(line, m, let_re)) fail(file, ln, "expected 'let NAME = value'");
      if (s.macros.count(m[1])) fail(file, ln, "duplicate name '" + m[1].str() + "'");
      s.macros[m[1]] = expand(trim(m[2]));
    } else if (word == "step") {
      if (!std::regex_match(line, m, step_re)) fail(file, ln, "expected 'step ID KIND'");
      ProofStep st;
      st.id = m[1];
      st.line = ln;
      bool known = false;
      for (auto& [k, n] : kKinds)
        if (m[2] == n) st.kind = k, known = true;
      if (!known) fail(file, ln, "unknown step kind '" + m[2].str() + "'");
      if (!ids.insert(st.id).second) fail(file, ln, "duplicate step id '" + st.id + "'");
      s.steps.push_back(std::move(st));
      cur = &s.steps.back();
    } else {
      fail(file, ln, "unknown directive '" + word + "'");
    }
  }
  for (auto& st : s.steps) {
    if (st.ref.empty()) fail(file, st.line, "step '" + st.id + "' has no ref");
    auto allowed = allowed_keys(st.kind);
    for (auto& [k, f] : st.fields)
      if (!allowed.count(k) && !kCommon.count(k)) fail(file, f.line, "key '" + k + "' not valid for " + step_kind_name(st.kind));
    for (auto& k : required_keys(st.kind))
      if (!st.has(k)) fail(file, st.line, "step '" + st.id + "' needs '" + k + "'");
    for (auto& d : st.after) {
      bool earlier = false;
      for (auto& o : s.steps) {
        if (&o == &st) break;
        if (o.id == d) earlier = true;
      }
      if (!earlier) fail(file, st.fields.at("after").line, "unknown or later dependency '" + d + "'");
    }
  }
  return s;
}

ProofScript load_script(const std::string& path) { return parse_script(read_file(path), path); }

Database load_script_database(const ProofScript& s) {
  Database db;
  for (auto& f : s.loads) {
    std::filesystem::path p(f);
    if (p.is_relative() && !s.dir.empty()) p = std::filesystem::path(s.dir) / p;
    load_file(db, p.string());
  }
  return db;
}

void check_script(const ProofScript& s, const Database& db) {
  for (auto& st : s.steps) {
    for (int mode = 0; mode < 2; ++mode) {
      try {
        validate_step(st, s, db, mode);
      } catch (const SourceError&) {
        throw;
      } catch (const std::exception& e) {
        fail(s.file, st.line, "step '" + st.id + "': " + e.what());
      }
    }
  }
}

std::vector<std::string> referenced_relations(const ProofStep& step, const ProofScript&, const Database& db) {
  std::set<std::string> out;
  static const std::regex token(R"([^\s,|\[\]()*+^/=]+)");
  for (auto& [k, f] : step.fields) {
    if (k == "ref" || k == "note" || k == "after") continue;
    const std::string& v = f.value;
    for (std::sregex_iterator it(v.begin(), v.end(), token), end; it != end; ++it) {
      std::string name = it->str();
      if (auto at = name.find('@'); at != std::string::npos) name = name.substr(0, at);
      if (!name.empty() && name[0] == '~') name = name.substr(1);
      if (db.rels.contains(name)) out.insert(name);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace hy
