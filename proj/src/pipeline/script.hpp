// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "reldb/database.hpp"

namespace hy {

enum class StepKind {
  Specialize,
  Pfaffian,
  Commutator,
  Solve,
  Eliminate,
  Homogenize,
  Groebner,
  Triviality,
  Filter,
  Substitution,
  Skip
};

const char* step_kind_name(StepKind k);

struct ScriptField {
  std::string value;
  int line = 0;
};

struct ProofStep {
  std::string id;
  StepKind kind = StepKind::Skip;
  std::string ref;
  std::vector<std::string> after;
  std::map<std::string, ScriptField> fields;
  int line = 0;

  bool has(const std::string& key) const { return fields.count(key) > 0; }
  const std::string& get(const std::string& key) const;
  // True when some list field holds an "A|B" alternative.
  bool dual() const;
};

struct ProofScript {
  std::string file;
  std::string dir;
  std::vector<std::string> loads;
  std::vector<std::string> ranking;
  // "let NAME = value"; fields expand $NAME textually.
  std::map<std::string, std::string> macros;
  std::vector<ProofStep> steps;

  const ProofStep* find(const std::string& id) const;
};

ProofScript parse_script(const std::string& text, const std::string& file);
ProofScript load_script(const std::string& path);
// Loads the relation files named by the script, relative to its directory.
Database load_script_database(const ProofScript& s);
// Resolves names, expressions and dependencies against db; throws SourceError.
void check_script(const ProofScript& s, const Database& db);

std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::string trim(const std::string& s);
// Base relation names (no "~", no "@SYM") a step mentions, over both modes.
std::vector<std::string> referenced_relations(const ProofStep& step, const ProofScript& s, const Database& db);

}  // namespace hy
