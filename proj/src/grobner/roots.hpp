// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "grobner/univariate.hpp"

namespace hy {

struct CRational {
  Rational re, im;
};

// Closed disk with exact rational center and a rational upper bound on the radius.
struct RootDisk {
  CRational center;
  Rational radius;
};

// Disjoint disks each holding exactly one root of the squarefree p, from
// Aberth iterates at `bits` of precision and Smith's inclusion bound.
std::optional<std::vector<RootDisk>> isolate_roots(const UPoly& p, unsigned bits);

// A disk containing q(z) for every z in d.
RootDisk eval_disk(const UPoly& q, const RootDisk& d);

// Smallest convenient rational >= sqrt(x).
Rational sqrt_upper(const Rational& x);

}  // namespace hy
