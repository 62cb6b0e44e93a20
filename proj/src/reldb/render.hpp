// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "algebra/polynomial.hpp"
#include "grobner/gb.hpp"
#include "np/fraction.hpp"

namespace hy {

std::string render(const Rational& c);
std::string render(const Monomial& m);
std::string render_terms(const std::vector<Term>& terms);
std::string render(const Polynomial& p);
std::string render(const Polynomial& p, const MonomialOrder& o);
std::string render(const Fraction& f);
// Generators joined by "; ", sorted by the ambient order (largest first),
// each written in the basis order.
std::string render(const GroebnerBasis& g);

}  // namespace hy
