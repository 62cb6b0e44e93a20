// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/relation.hpp"

namespace hy {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Appendix: return "appendix";
    case Provenance::Paper: return "paper-eq";
    case Provenance::Condition: return "transcribed-condition";
    case Provenance::Corrected: return "corrected";
    case Provenance::Assumption: return "assumption";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

Relation Relation::conjugate() const {
  Relation r = *this;
  r.name = name.starts_with("~") ? name.substr(1) : "~" + name;
  r.value = value.conjugate();
  if (lhs) r.lhs = reg().conj(*lhs);
  return r;
}

}  // namespace hy
