// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "algebra/polynomial.hpp"
#include "np/fraction.hpp"

namespace hy {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col),
        what_(msg) {}
  int line;
  int col;
  std::string what_;
};

struct ExprContext {
  // Reject identifiers that are neither NP scalars nor already interned.
  bool strict = false;
  // When set, plain identifiers must be NP scalars or accepted here.
  std::function<bool(const std::string&)> declared;
  // Bare D, T, d, bd become marker symbols (commutator right-hand sides).
  bool op_markers = false;
  // Resolves "[name]" references.
  std::function<std::optional<Fraction>(const std::string&)> ref;
  int line = 1;
  int col = 1;
};

Fraction parse_fraction(std::string_view text, const ExprContext& ctx = {});
// Throws ParseError "non-polynomial result" if a polynomial divisor remains.
Polynomial parse_expr(std::string_view text, const ExprContext& ctx = {});
// Parses "lhs = rhs" (or a bare expression) into lhs - rhs.
Fraction parse_equation(std::string_view text, const ExprContext& ctx = {});

SymId op_marker(DerivOp op);

}  // namespace hy
