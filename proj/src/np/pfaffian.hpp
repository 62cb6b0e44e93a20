// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "np/gauge.hpp"

namespace hy {

// Values of derivative atoms. Every insertion also stores the conjugate entry.
class PfaffianTable {
 public:
  void insert(SymId atom, const Fraction& value);
  const Fraction* find(SymId atom) const;
  bool contains(SymId atom) const { return t_.count(atom) > 0; }
  size_t size() const { return t_.size(); }
  const std::map<SymId, Fraction>& entries() const { return t_; }

  // Substitute entries into each other until no value mentions a key.
  void close(int max_rounds = 12);
  // Replace every tabulated atom occurring in f by its value.
  Fraction resolve(const Fraction& f) const;
  // Structural check: (op, s) -> p present implies (conj op, conj s) -> conj p.
  bool conjugation_closed() const;

 private:
  std::map<SymId, Fraction> t_;
};

// Leibniz expansion of op applied to f. Atoms found in the table are
// replaced by their values, gauge-killed atoms vanish, everything else is
// emitted as a derivative atom.
Fraction apply_deriv(DerivOp op, const Fraction& f, const PfaffianTable& table, const Gauge* gauge = nullptr);
Fraction apply_deriv(DerivOp op, const Polynomial& p, const PfaffianTable& table, const Gauge* gauge = nullptr);

}  // namespace hy
