// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "np/commutator.hpp"
#include "np/gauge.hpp"
#include "np/relation.hpp"
#include "reldb/expr.hpp"

namespace hy {

// A ParseError that knows its file.
class SourceError : public ParseError {
 public:
  SourceError(const std::string& file, const std::string& msg, int line, int col)
      : ParseError(msg, line, col), file(file), full(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg) {}
  const char* what() const noexcept override { return full.c_str(); }
  std::string file;
  std::string full;
};

// Named relations in declaration order. "~NAME" resolves to the conjugate of NAME.
class RelationSet {
 public:
  // Throws AlgebraError on a duplicate name.
  void add(Relation r);
  const Relation* find(const std::string& name) const;
  const Relation& get(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  const std::vector<std::string>& names() const { return order_; }
  size_t size() const { return order_.size(); }
  // Adds "~NAME" for every relation whose conjugate is not already present.
  RelationSet with_conjugates() const;
  // Replaces the value of an existing relation.
  void replace(const std::string& name, const Fraction& value);

 private:
  std::map<std::string, Relation> rels_;
  std::vector<std::string> order_;
  mutable std::map<std::string, std::shared_ptr<Relation>> conj_cache_;
};

struct Database {
  RelationSet rels;
  std::map<std::string, Gauge> gauges;
  std::string default_gauge;
  CommutatorRules rules;
  std::set<std::string> declared;  // declared variable names (both partners)
  std::vector<std::string> ranking;
  std::vector<std::string> files;

  const Gauge* gauge(const std::string& name = "") const;
};

struct LintIssue {
  std::string file;
  int line = 0;
  std::string message;
};

// Parses one source text into db. Lint issues (missing "# ref:") are
// collected when `lint` is given, otherwise they are errors.
void load_text(Database& db, const std::string& text, const std::string& file,
               std::vector<LintIssue>* lint = nullptr);
void load_file(Database& db, const std::string& path, std::vector<LintIssue>* lint = nullptr);

// Every relation declaration must carry a "# ref:" comment.
std::vector<LintIssue> lint_text(const std::string& text, const std::string& file);

std::string read_file(const std::string& path);

}  // namespace hy
