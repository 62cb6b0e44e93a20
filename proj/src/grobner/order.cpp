// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "grobner/order.hpp"

namespace hy {

namespace {

int lex_cmp(const uint16_t* a, const uint16_t* b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int grevlex_cmp(const uint16_t* a, const uint16_t* b, size_t lo, size_t hi) {
  uint32_t da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

int kind_cmp(OrderKind k, const uint16_t* a, const uint16_t* b, size_t lo, size_t hi) {
  return k == OrderKind::Lex ? lex_cmp(a, b, lo, hi) : grevlex_cmp(a, b, lo, hi);
}

}  // namespace

MonomialOrder MonomialOrder::elimination(const std::vector<SymId>& elim, const MonomialOrder& base) {
  if (base.kind == OrderKind::Block) throw AlgebraError("nested block orders unsupported");
  MonomialOrder o;
  o.kind = OrderKind::Block;
  o.ranking = elim;
  o.ranking.insert(o.ranking.end(), base.ranking.begin(), base.ranking.end());
  o.block = elim.size();
  o.tail = base.kind;
  return o;
}

int MonomialOrder::index_of(SymId s) const {
  for (size_t i = 0; i < ranking.size(); ++i)
    if (ranking[i] == s) return static_cast<int>(i);
  return -1;
}

int MonomialOrder::cmp(const uint16_t* a, const uint16_t* b) const {
  size_t n = ranking.size();
  switch (kind) {
    case OrderKind::Lex: return lex_cmp(a, b, 0, n);
    case OrderKind::Grevlex: return grevlex_cmp(a, b, 0, n);
    case OrderKind::Block: {
      int c = grevlex_cmp(a, b, 0, block);
      if (c) return c;
      return kind_cmp(tail, a, b, block, n);
    }
  }
  return 0;
}

MonomialOrder MonomialOrder::tail_order() const {
  if (kind != OrderKind::Block) return *this;
  MonomialOrder o;
  o.kind = tail;
  o.tail = tail;
  o.ranking.assign(ranking.begin() + static_cast<long>(block), ranking.end());
  return o;
}

std::string MonomialOrder::describe() const {
  std::string s = kind == OrderKind::Lex ? "lex" : kind == OrderKind::Grevlex ? "grevlex" : "block";
  s += "(";
  for (size_t i = 0; i < ranking.size(); ++i) {
    if (i) s += kind == OrderKind::Block && i == block ? " | " : " > ";
    s += reg().name(ranking[i]);
  }
  return s + ")";
}

std::vector<SymId> ranking_from_names(const std::vector<std::string>& names) {
  std::vector<SymId> r;
  for (auto& n : names) r.push_back(reg().intern(n));
  return r;
}

}  // namespace hy
