// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "np/pfaffian.hpp"

namespace hy {

using OpCoeffs = std::vector<std::pair<DerivOp, Polynomial>>;

// [op1, op2] f = op1(op2 f) - op2(op1 f) = sum c_k op_k f.
class CommutatorRules {
 public:
  // Adds the rule and its conjugate.
  void add(DerivOp a, DerivOp b, OpCoeffs rhs);
  // Direct, conjugate or antisymmetric lookup.
  std::optional<OpCoeffs> get(DerivOp a, DerivOp b) const;
  size_t size() const { return r_.size(); }

 private:
  std::map<std::pair<DerivOp, DerivOp>, OpCoeffs> r_;
};

// Splits a polynomial linear in the operator marker symbols into coefficients.
OpCoeffs split_op_markers(const Polynomial& p);

// op1(op2 f) - op2(op1 f) - rule(f), expanded through the table and the gauge.
Fraction commutator_residual(DerivOp a, DerivOp b, const Fraction& f, const PfaffianTable& table,
                             const CommutatorRules& rules, const Gauge* gauge = nullptr);

}  // namespace hy
