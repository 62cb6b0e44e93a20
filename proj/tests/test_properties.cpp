// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "properties.hpp"

namespace {

constexpr int kCases = 500;

void expect(const hy::props::Result& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("ring axioms") { expect(hy::props::ring_axioms(kCases, 101)); }
TEST_CASE("conjugation is an involutive automorphism") { expect(hy::props::conjugation(kCases, 102)); }
TEST_CASE("derivatives obey Leibniz and commute with conjugation") { expect(hy::props::leibniz(kCases, 103)); }
TEST_CASE("S-polynomials of computed bases reduce to zero") { expect(hy::props::spoly_reduction(kCases, 104)); }
TEST_CASE("reduced bases ignore generator order and scaling") { expect(hy::props::gb_canonical(kCases, 105)); }
TEST_CASE("saturation contains the ideal") { expect(hy::props::saturation_contains(kCases, 106)); }
TEST_CASE("parse inverts render") { expect(hy::props::parse_render(kCases, 107)); }
