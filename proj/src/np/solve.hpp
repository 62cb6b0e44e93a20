// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "np/relation.hpp"

namespace hy {

struct Solved {
  Fraction value;
  // Nonconstant coefficient of the atom, assumed nonzero.
  std::optional<Polynomial> nonzero;
};

// rel = c1 * atom + c0 with atom absent from c0, c1; returns -c0 / c1.
Solved solve_for_atom(const Fraction& rel, SymId atom);

// c2 * N1 - c1 * N2 with the atoms gone; primitive part.
Polynomial eliminate_atom(const Polynomial& n1, const Polynomial& n2, const std::vector<SymId>& atoms);

// Rational coefficients expressing target in the span of the sources.
std::optional<std::vector<Rational>> rational_span(const Polynomial& target, const std::vector<Polynomial>& sources);

}  // namespace hy
