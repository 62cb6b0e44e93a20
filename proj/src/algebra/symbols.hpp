// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hy {

using SymId = uint32_t;

enum class SymbolKind : uint8_t { NpScalar, XVariable, DerivAtom, Auxiliary };

// D, Delta, delta, deltabar; surface tokens D, T, d, bd.
enum class DerivOp : uint8_t { D = 0, Delta = 1, delta = 2, deltabar = 3 };

DerivOp conj_op(DerivOp op);
const char* op_token(DerivOp op);
std::optional<DerivOp> op_from_token(std::string_view tok);

struct Symbol {
  SymId id = 0;
  std::string name;
  SymId conj = 0;
  SymbolKind kind = SymbolKind::XVariable;
  DerivOp op = DerivOp::D;  // derivative atoms only
  SymId base = 0;           // derivative atoms only
  int order = 0;            // derivative nesting depth
};

// Process-wide interning table. NP scalars and their first and second order
// derivative atoms are interned at construction so their ids never depend on
// the order in which threads touch them.
class SymbolRegistry {
 public:
  static SymbolRegistry& global();

  // Accepts "x", "~x", "D(x)", "bd(~x)", ... Plain unknown identifiers are
  // declared as a conjugate pair of the given kind.
  SymId intern(std::string_view name, SymbolKind kind = SymbolKind::XVariable);
  std::optional<SymId> find(std::string_view name) const;
  SymId deriv(DerivOp op, SymId base);
  // Self-paired helper variable (Rabinowitsch t, scaling parameters).
  SymId aux(std::string_view name);

  SymId conj(SymId id) const;
  std::string name(SymId id) const;
  Symbol get(SymId id) const;
  bool is_np_scalar_name(std::string_view name) const;
  size_t size() const;

 private:
  SymbolRegistry();
  SymId intern_locked(std::string_view name, SymbolKind kind);
  SymId add_locked(std::string name, SymbolKind kind);
  SymId deriv_locked(DerivOp op, SymId base);
  void pair_locked(SymId a, SymId b);

  mutable std::shared_mutex mu_;
  std::deque<Symbol> syms_;
  std::unordered_map<std::string, SymId> by_name_;
};

inline SymbolRegistry& reg() { return SymbolRegistry::global(); }

}  // namespace hy
