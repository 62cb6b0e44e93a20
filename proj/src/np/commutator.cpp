// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/commutator.hpp"

#include "reldb/expr.hpp"

namespace hy {

void CommutatorRules::add(DerivOp a, DerivOp b, OpCoeffs rhs) {
  OpCoeffs c;
  for (auto& [op, p] : rhs) c.push_back({conj_op(op), p.conjugate()});
  r_[{conj_op(a), conj_op(b)}] = std::move(c);
  r_[{a, b}] = std::move(rhs);
}

std::optional<OpCoeffs> CommutatorRules::get(DerivOp a, DerivOp b) const {
  if (a == b) return OpCoeffs{};
  auto it = r_.find({a, b});
  if (it != r_.end()) return it->second;
  it = r_.find({b, a});
  if (it == r_.end()) return std::nullopt;
  OpCoeffs out;
  for (auto& [op, p] : it->second) out.push_back({op, -p});
  return out;
}

OpCoeffs split_op_markers(const Polynomial& p) {
  OpCoeffs out;
  Polynomial rest = p;
  for (int k = 0; k < 4; ++k) {
    SymId m = op_marker(DerivOp(k));
    if (p.degree_in(m) > 1) throw AlgebraError("commutator rule is not linear in the operators");
    Polynomial c = p.coeff(m, 1);
    rest = rest.coeff(m, 0);
    if (!c.is_zero()) out.push_back({DerivOp(k), c});
  }
  if (!rest.is_zero()) throw AlgebraError("commutator rule has a term without an operator");
  return out;
}

Fraction commutator_residual(DerivOp a, DerivOp b, const Fraction& f, const PfaffianTable& table,
                             const CommutatorRules& rules, const Gauge* gauge) {
  auto rule = rules.get(a, b);
  if (!rule) throw AlgebraError("no commutator rule for this operator pair");
  Fraction g = gauge ? gauge->specialize(f) : f;
  Fraction ab = apply_deriv(a, apply_deriv(b, g, table, gauge), table, gauge);
  Fraction ba = apply_deriv(b, apply_deriv(a, g, table, gauge), table, gauge);
  Fraction acc = ab - ba;
  for (auto& [op, c] : *rule) {
    Polynomial cs = gauge ? gauge->specialize(c) : c;
    if (cs.is_zero()) continue;
    acc = acc - Fraction(cs) * apply_deriv(op, g, table, gauge);
  }
  acc = table.resolve(acc.cancelled());
  return gauge ? gauge->specialize(acc) : acc;
}

}  // namespace hy
