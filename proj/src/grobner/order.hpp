// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra/polynomial.hpp"

namespace hy {

enum class OrderKind { Lex, Grevlex, Block };

// ranking lists variables from highest to lowest. A block order compares the
// first `block` variables by grevlex, then the rest by `tail`.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<SymId> ranking;
  size_t block = 0;
  OrderKind tail = OrderKind::Grevlex;

  static MonomialOrder lex(std::vector<SymId> r) { return {OrderKind::Lex, std::move(r), 0, OrderKind::Lex}; }
  static MonomialOrder grevlex(std::vector<SymId> r) { return {OrderKind::Grevlex, std::move(r), 0, OrderKind::Grevlex}; }
  // Eliminates `elim` (ranked above everything in base).
  static MonomialOrder elimination(const std::vector<SymId>& elim, const MonomialOrder& base);

  size_t nvars() const { return ranking.size(); }
  int index_of(SymId s) const;
  // Comparison on dense exponent vectors laid out in ranking order.
  int cmp(const uint16_t* a, const uint16_t* b) const;
  // The same order restricted to the variables after the eliminated block.
  MonomialOrder tail_order() const;
  std::string describe() const;
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && ranking == o.ranking && block == o.block && tail == o.tail;
  }
};

// Variables of the polynomials ordered by the given names; names not present are dropped.
std::vector<SymId> ranking_from_names(const std::vector<std::string>& names);

}  // namespace hy
