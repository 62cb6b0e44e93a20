// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hy::props {

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

Result ring_axioms(int cases, uint32_t seed);
Result conjugation(int cases, uint32_t seed);
Result leibniz(int cases, uint32_t seed);
Result spoly_reduction(int cases, uint32_t seed);
Result gb_canonical(int cases, uint32_t seed);
Result saturation_contains(int cases, uint32_t seed);
Result parse_render(int cases, uint32_t seed);

// All seven suites with `cases` each.
std::vector<Result> run_all(int cases, uint32_t seed);

}  // namespace hy::props
