// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "grobner/gb.hpp"

namespace hy {

// Reduced lex basis of one branch plus the splits that produced it.
struct TriangularSystem {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  std::vector<std::string> trail;
};

struct GsolveOptions {
  std::vector<SymId> ranking;  // lex ranking, highest first; empty = by id
  size_t max_systems = 64;
  int max_depth = 24;
};

// Branches covering V(gens) minus the zeros of the nonzero polynomials.
// Splits on monomial and primitive content, squarefree parts and rational
// roots of univariate members; each branch is saturated by the nonzero list.
std::vector<TriangularSystem> gsolve(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& nonzero,
                                     const GsolveOptions& opt = {}, const GbConfig& cfg = {},
                                     GroebnerBasis* base = nullptr);

enum class FilterStatus { Kept, Dropped, Inconclusive };
const char* filter_status_name(FilterStatus s);

// sum a_i |x_i|^2 = rhs over pair variables that occur nowhere else.
struct TorusRelation {
  std::vector<std::pair<SymId, Rational>> terms;
  Rational rhs;
};

struct FilterResult {
  TriangularSystem system;
  FilterStatus status = FilterStatus::Inconclusive;
  std::string note;
  // Basis of the system together with its conjugate.
  std::vector<Polynomial> augmented;
  std::vector<TorusRelation> torus;
  // Augmented basis without the torus relations.
  std::vector<Polynomial> rest;
};

// For a kept system: true iff every conjugation-consistent solution has v = 0.
bool forces_zero(const FilterResult& r, SymId v, const GbConfig& cfg = {});

struct FilterOptions {
  std::vector<unsigned> precision = {128, 256, 512};
};

// Keeps the systems with at least one solution whose barred coordinates are
// the complex conjugates of the unbarred ones.
std::vector<FilterResult> conjugation_filter(const std::vector<TriangularSystem>& systems,
                                             const FilterOptions& opt = {}, const GbConfig& cfg = {});

}  // namespace hy
