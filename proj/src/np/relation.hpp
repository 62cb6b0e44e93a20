// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "np/fraction.hpp"

namespace hy {

enum class Provenance { Appendix, Paper, Condition, Corrected, Assumption, Derived };

const char* provenance_name(Provenance p);

// A named equality stored as lhs - rhs. Denominators of the transcription
// stay in `value`; its numerator is the polynomial form.
struct Relation {
  std::string name;
  Provenance provenance = Provenance::Paper;
  std::string tag;  // condition component or the corrected equation
  Fraction value;
  // Set when the left side is a single symbol or derivative atom.
  std::optional<SymId> lhs;
  bool declares_poly = false;
  std::string ref;
  int line = 0;

  const Polynomial& poly() const { return value.num(); }
  Relation conjugate() const;
};

}  // namespace hy
