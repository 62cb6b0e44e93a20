// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>

#include "np/relation.hpp"

namespace hy {

// Scalars fixed to constants plus derivative atoms declared zero. Both are
// stored closed under conjugation.
class Gauge {
 public:
  std::string name;

  void set(SymId s, const Rational& c);
  void zero(SymId atom);

  bool is_fixed(SymId s) const { return fixed_.count(s) > 0; }
  // True for atoms of fixed scalars and for atoms built on a zero atom.
  bool kills(SymId s) const;
  const std::map<SymId, Rational>& fixed() const { return fixed_; }
  const std::set<SymId>& zeros() const { return zeros_; }

  Polynomial specialize(const Polynomial& p) const;
  Fraction specialize(const Fraction& f) const;
  Relation specialize(const Relation& r) const;

 private:
  std::map<SymId, Rational> fixed_;
  std::set<SymId> zeros_;
};

}  // namespace hy
