// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/gauge.hpp"

namespace hy {

void Gauge::set(SymId s, const Rational& c) {
  fixed_[s] = c;
  fixed_[reg().conj(s)] = c;
}

void Gauge::zero(SymId atom) {
  zeros_.insert(atom);
  zeros_.insert(reg().conj(atom));
}

bool Gauge::kills(SymId s) const {
  Symbol sym = reg().get(s);
  while (sym.kind == SymbolKind::DerivAtom) {
    if (zeros_.count(sym.id)) return true;
    sym = reg().get(sym.base);
  }
  return fixed_.count(sym.id) > 0;
}

Polynomial Gauge::specialize(const Polynomial& p) const {
  std::map<SymId, Polynomial> m;
  for (SymId s : p.variables()) {
    auto it = fixed_.find(s);
    if (it != fixed_.end())
      m[s] = Polynomial(it->second);
    else if (kills(s))
      m[s] = Polynomial(0);
  }
  return m.empty() ? p : p.substitute(m);
}

Fraction Gauge::specialize(const Fraction& f) const {
  std::vector<Fraction::Factor> den;
  for (auto& [g, k] : f.den()) {
    Polynomial h = specialize(g);
    if (h.is_zero()) throw AlgebraError("gauge annihilates a denominator");
    den.push_back({h, k});
  }
  return Fraction::make(specialize(f.num()), std::move(den)).cancelled();
}

Relation Gauge::specialize(const Relation& r) const {
  Relation out = r;
  out.value = specialize(r.value);
  return out;
}

}  // namespace hy
