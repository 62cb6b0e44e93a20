// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra/polynomial.hpp"
#include "grobner/order.hpp"

namespace hy {

struct GbConfig {
  uint64_t max_pairs = 200000;
  uint32_t max_degree = 60;
  uint64_t max_coeff_bits = 1000000;
  unsigned threads = 1;
  // Optional cooperative cancellation.
  const std::atomic<bool>* cancel = nullptr;
};

class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& limit, const std::string& detail)
      : std::runtime_error("resource limit exceeded: " + limit + " (" + detail + ")"), limit(limit) {}
  std::string limit;
};

struct GbStats {
  uint64_t pairs = 0;
  uint64_t reductions_to_zero = 0;
  uint32_t max_degree = 0;
  uint64_t max_bits = 0;
};

struct GroebnerBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool reduced = true;
  GbStats stats;

  bool is_unit() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
};

// Terms of p sorted descending under o. Every variable of p must be ranked.
std::vector<Term> ordered_terms(const Polynomial& p, const MonomialOrder& o);
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& o);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& o);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& o, const GbConfig& cfg = {});
// Single variables of the monomial content, then the primitive part.
std::vector<Polynomial> saturation_factors(const Polynomial& h);
// Basis of <gens> : h^inf, computed factor by factor.
GroebnerBasis saturate(const std::vector<Polynomial>& gens, const Polynomial& h, const MonomialOrder& o,
                       const GbConfig& cfg = {});
bool is_trivial(const std::vector<Polynomial>& gens, const MonomialOrder& o, const GbConfig& cfg = {});
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const GbConfig& cfg = {});
// Ranking over all variables of the inputs, sorted by id.
std::vector<SymId> default_ranking(const std::vector<Polynomial>& ps);

// Every S-polynomial of G reduces to zero (Buchberger criterion, checked directly).
bool is_groebner(const std::vector<Polynomial>& G, const MonomialOrder& o);

}  // namespace hy
