// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "reldb/render.hpp"

#include <algorithm>

namespace hy {

std::string render(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string render(const Monomial& m) {
  std::string s;
  for (auto& [v, k] : m.entries()) {
    if (!s.empty()) s += "*";
    s += reg().name(v);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms) {
    Rational c = t.c;
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (sgn(c) < 0) c = -c;
    if (t.m.is_one()) {
      s += render(c);
    } else {
      if (c != 1) s += render(c) + "*";
      s += render(t.m);
    }
  }
  return s;
}

std::string render(const Polynomial& p) { return render_terms(p.terms()); }

std::string render(const Polynomial& p, const MonomialOrder& o) { return render_terms(ordered_terms(p, o)); }

std::string render(const Fraction& f) {
  if (f.is_polynomial()) return render(f.num());
  std::string d;
  for (auto& [g, k] : f.den()) {
    if (!d.empty()) d += "*";
    d += "(" + render(g) + ")";
    if (k > 1) d += "^" + std::to_string(k);
  }
  return "(" + render(f.num()) + ")/(" + d + ")";
}

std::string render(const GroebnerBasis& g) {
  std::vector<Polynomial> v = g.gens;
  std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) { return b.less(a); });
  std::string s;
  for (auto& p : v) {
    if (!s.empty()) s += "; ";
    s += g.order.ranking.empty() ? render(p) : render(p, g.order);
  }
  return s.empty() ? "0" : s;
}

}  // namespace hy
