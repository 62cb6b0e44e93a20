// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "np/pfaffian.hpp"

namespace hy {

void PfaffianTable::insert(SymId atom, const Fraction& value) {
  t_[atom] = value;
  SymId c = reg().conj(atom);
  if (c != atom) t_[c] = value.conjugate();
}

const Fraction* PfaffianTable::find(SymId atom) const {
  auto it = t_.find(atom);
  return it == t_.end() ? nullptr : &it->second;
}

Fraction PfaffianTable::resolve(const Fraction& f) const {
  std::map<SymId, Fraction> m;
  for (SymId s : f.variables()) {
    auto it = t_.find(s);
    if (it != t_.end()) m[s] = it->second;
  }
  return m.empty() ? f : f.substitute(m).cancelled();
}

void PfaffianTable::close(int max_rounds) {
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (auto& [k, v] : t_) {
      for (SymId s : v.variables()) {
        if (t_.count(s)) {
          changed = true;
          break;
        }
      }
    }
    if (!changed) return;
    std::map<SymId, Fraction> next;
    for (auto& [k, v] : t_) next[k] = resolve(v);
    t_ = std::move(next);
  }
  throw AlgebraError("Pfaffian table does not close (cyclic entries)");
}

bool PfaffianTable::conjugation_closed() const {
  for (auto& [k, v] : t_) {
    auto it = t_.find(reg().conj(k));
    if (it == t_.end()) return false;
    Fraction d = (it->second - v.conjugate()).cancelled();
    if (!d.is_zero()) return false;
  }
  return true;
}

namespace {

Fraction atom_value(DerivOp op, SymId s, const PfaffianTable& table, const Gauge* gauge) {
  if (gauge && (gauge->is_fixed(s) || gauge->kills(s))) return Fraction(0);
  SymId a = reg().deriv(op, s);
  if (gauge && gauge->kills(a)) return Fraction(0);
  if (const Fraction* v = table.find(a)) return *v;
  return Fraction(Polynomial::var(a));
}

}  // namespace

Fraction apply_deriv(DerivOp op, const Polynomial& p, const PfaffianTable& table, const Gauge* gauge) {
  Fraction acc(0);
  for (SymId s : p.variables()) {
    Fraction v = atom_value(op, s, table, gauge);
    if (v.is_zero()) continue;
    acc = acc + Fraction(p.partial(s)) * v;
  }
  return acc.cancelled();
}

Fraction apply_deriv(DerivOp op, const Fraction& f, const PfaffianTable& table, const Gauge* gauge) {
  Fraction dn = apply_deriv(op, f.num(), table, gauge);
  if (f.is_polynomial()) return dn;
  // d(N / prod g^k) = dN / G - (N / G) * sum k dg / g
  Fraction whole = Fraction::make(f.num(), f.den());
  Fraction acc = Fraction::make(Polynomial(1), f.den()) * dn;
  for (auto& [g, k] : f.den()) {
    Fraction dg = apply_deriv(op, g, table, gauge);
    if (dg.is_zero()) continue;
    acc = acc - whole * dg * Fraction(Polynomial(static_cast<long>(k))) / Fraction(g);
  }
  return acc.cancelled();
}

}  // namespace hy
