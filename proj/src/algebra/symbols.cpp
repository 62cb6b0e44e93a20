// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "algebra/symbols.hpp"

#include <mutex>
#include <stdexcept>

namespace hy {

namespace {

const char* const kComplexScalars[] = {
    "kappa", "sigma", "rho",  "tau",  "eps",  "alpha", "beta", "gamma",
    "pi",    "lambda", "mu",  "nu",   "Psi0", "Psi1",  "Psi2", "Psi3",
    "Psi4",  "phi0",  "phi1", "phi2"};
const char* const kRealScalars[] = {"Phi00", "Phi11", "Phi22", "Lam"};
const char* const kPairedScalars[][2] = {
    {"Phi01", "Phi10"}, {"Phi02", "Phi20"}, {"Phi12", "Phi21"}};

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.';
}

}  // namespace

DerivOp conj_op(DerivOp op) {
  switch (op) {
    case DerivOp::delta: return DerivOp::deltabar;
    case DerivOp::deltabar: return DerivOp::delta;
    default: return op;
  }
}

const char* op_token(DerivOp op) {
  switch (op) {
    case DerivOp::D: return "D";
    case DerivOp::Delta: return "T";
    case DerivOp::delta: return "d";
    case DerivOp::deltabar: return "bd";
  }
  return "?";
}

std::optional<DerivOp> op_from_token(std::string_view tok) {
  if (tok == "D") return DerivOp::D;
  if (tok == "T") return DerivOp::Delta;
  if (tok == "d") return DerivOp::delta;
  if (tok == "bd") return DerivOp::deltabar;
  return std::nullopt;
}

SymbolRegistry& SymbolRegistry::global() {
  static SymbolRegistry r;
  return r;
}

SymbolRegistry::SymbolRegistry() {
  std::unique_lock lk(mu_);
  std::vector<SymId> scalars;
  for (const char* n : kComplexScalars) {
    SymId a = add_locked(n, SymbolKind::NpScalar);
    SymId b = add_locked(std::string("~") + n, SymbolKind::NpScalar);
    pair_locked(a, b);
    scalars.push_back(a);
    scalars.push_back(b);
  }
  for (auto& p : kPairedScalars) {
    SymId a = add_locked(p[0], SymbolKind::NpScalar);
    SymId b = add_locked(p[1], SymbolKind::NpScalar);
    pair_locked(a, b);
    scalars.push_back(a);
    scalars.push_back(b);
  }
  for (const char* n : kRealScalars) {
    SymId a = add_locked(n, SymbolKind::NpScalar);
    pair_locked(a, a);
    scalars.push_back(a);
  }
  std::vector<SymId> first;
  for (SymId s : scalars)
    for (int k = 0; k < 4; ++k) first.push_back(deriv_locked(DerivOp(k), s));
  for (SymId s : first)
    for (int k = 0; k < 4; ++k) deriv_locked(DerivOp(k), s);
}

SymId SymbolRegistry::add_locked(std::string name, SymbolKind kind) {
  Symbol s;
  s.id = static_cast<SymId>(syms_.size());
  s.name = name;
  s.conj = s.id;
  s.kind = kind;
  syms_.push_back(s);
  by_name_.emplace(std::move(name), s.id);
  return s.id;
}

void SymbolRegistry::pair_locked(SymId a, SymId b) {
  syms_[a].conj = b;
  syms_[b].conj = a;
}

SymId SymbolRegistry::deriv_locked(DerivOp op, SymId base) {
  std::string nm = std::string(op_token(op)) + "(" + syms_[base].name + ")";
  auto it = by_name_.find(nm);
  if (it != by_name_.end()) return it->second;
  SymId cb = syms_[base].conj;
  DerivOp cop = conj_op(op);
  SymId a = add_locked(nm, SymbolKind::DerivAtom);
  syms_[a].op = op;
  syms_[a].base = base;
  syms_[a].order = syms_[base].order + 1;
  std::string cn = std::string(op_token(cop)) + "(" + syms_[cb].name + ")";
  if (cn == nm) {
    pair_locked(a, a);
    return a;
  }
  SymId b = add_locked(cn, SymbolKind::DerivAtom);
  syms_[b].op = cop;
  syms_[b].base = cb;
  syms_[b].order = syms_[cb].order + 1;
  pair_locked(a, b);
  return a;
}

SymId SymbolRegistry::intern_locked(std::string_view name, SymbolKind kind) {
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  if (name[0] == '~') return syms_[intern_locked(name.substr(1), kind)].conj;
  auto lp = name.find('(');
  if (lp != std::string_view::npos) {
    if (name.back() != ')') throw std::invalid_argument("bad atom name");
    auto op = op_from_token(name.substr(0, lp));
    if (!op) throw std::invalid_argument("unknown operator");
    SymId inner =
        intern_locked(name.substr(lp + 1, name.size() - lp - 2), kind);
    return deriv_locked(*op, inner);
  }
  for (char c : name)
    if (!is_ident_char(c)) throw std::invalid_argument("bad symbol name");
  SymId a = add_locked(std::string(name), kind);
  SymId b = add_locked("~" + std::string(name), kind);
  pair_locked(a, b);
  return a;
}

SymId SymbolRegistry::intern(std::string_view name, SymbolKind kind) {
  {
    std::shared_lock lk(mu_);
    auto it = by_name_.find(std::string(name));
    if (it != by_name_.end()) return it->second;
  }
  std::unique_lock lk(mu_);
  return intern_locked(name, kind);
}

std::optional<SymId> SymbolRegistry::find(std::string_view name) const {
  std::shared_lock lk(mu_);
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  if (!name.empty() && name[0] == '~') {
    auto jt = by_name_.find(std::string(name.substr(1)));
    if (jt != by_name_.end()) return syms_[jt->second].conj;
  }
  return std::nullopt;
}

SymId SymbolRegistry::deriv(DerivOp op, SymId base) {
  {
    std::shared_lock lk(mu_);
    std::string nm = std::string(op_token(op)) + "(" + syms_[base].name + ")";
    auto it = by_name_.find(nm);
    if (it != by_name_.end()) return it->second;
  }
  std::unique_lock lk(mu_);
  return deriv_locked(op, base);
}

SymId SymbolRegistry::aux(std::string_view name) {
  std::unique_lock lk(mu_);
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  SymId a = add_locked(std::string(name), SymbolKind::Auxiliary);
  return a;
}

SymId SymbolRegistry::conj(SymId id) const {
  std::shared_lock lk(mu_);
  return syms_[id].conj;
}

std::string SymbolRegistry::name(SymId id) const {
  std::shared_lock lk(mu_);
  return syms_[id].name;
}

Symbol SymbolRegistry::get(SymId id) const {
  std::shared_lock lk(mu_);
  return syms_[id];
}

bool SymbolRegistry::is_np_scalar_name(std::string_view name) const {
  auto id = find(name);
  return id && get(*id).kind == SymbolKind::NpScalar;
}

size_t SymbolRegistry::size() const {
  std::shared_lock lk(mu_);
  return syms_.size();
}

}  // namespace hy
