// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "grobner/gb.hpp"
#include "huygens.h"
#include "json.hpp"
#include "pipeline/replay.hpp"
#include "reldb/expr.hpp"
#include "reldb/polyfile.hpp"
#include "reldb/render.hpp"

struct hy_context {
  hy::StepOptions opt;
  std::vector<std::string> ranking;
  std::string data_dir;
  std::string report;
  std::string error;
};

struct hy_report {
  hy::Report rep;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string resolve(const hy_context* ctx, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative() && !ctx->data_dir.empty() && !std::filesystem::exists(p)) {
    auto q = std::filesystem::path(ctx->data_dir) / p;
    if (std::filesystem::exists(q)) return q.string();
  }
  return path;
}

// Runs f, mapping exceptions to status codes and ctx->error.
template <class F>
hy_status guarded(hy_context* ctx, F&& f) {
  if (!ctx) return HY_INTERNAL_ERROR;
  ctx->error.clear();
  try {
    return f();
  } catch (const hy::ResourceError& e) {
    ctx->error = e.what();
    return HY_RESOURCE_LIMIT;
  } catch (const hy::ParseError& e) {
    ctx->error = e.what();
    return HY_INPUT_ERROR;
  } catch (const hy::AlgebraError& e) {
    ctx->error = e.what();
    return HY_INPUT_ERROR;
  } catch (const nlohmann::json::exception& e) {
    ctx->error = std::string("config: ") + e.what();
    return HY_INPUT_ERROR;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return HY_INTERNAL_ERROR;
  }
}

bool ends_with(const std::string& s, const char* suf) {
  size_t n = std::strlen(suf);
  return s.size() >= n && s.compare(s.size() - n, n, suf) == 0;
}

std::vector<hy::SymId> ranking_for(const std::vector<std::string>& names, const std::vector<hy::Polynomial>& ps) {
  std::vector<hy::SymId> rk;
  for (auto& n : names)
    if (auto s = hy::reg().find(n); s && std::find(rk.begin(), rk.end(), *s) == rk.end()) rk.push_back(*s);
  for (hy::SymId s : hy::default_ranking(ps))
    if (std::find(rk.begin(), rk.end(), s) == rk.end()) rk.push_back(s);
  return rk;
}

const hy::StepReport* step_at(const hy_report* rep, size_t i) {
  return rep && i < rep->rep.steps.size() ? &rep->rep.steps[i] : nullptr;
}

}  // namespace

extern "C" {

const char* hy_version(void) { return "0.1.0"; }

hy_context* hy_context_new(void) { return new (std::nothrow) hy_context(); }

void hy_context_free(hy_context* ctx) { delete ctx; }

hy_status hy_context_load_config(hy_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    std::ifstream in(path);
    if (!in) {
      ctx->error = std::string(path) + ": cannot open config";
      return HY_INPUT_ERROR;
    }
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object()) throw hy::AlgebraError("config must be a JSON object");
    auto& gb = ctx->opt.gb;
    for (auto& [k, v] : j.items()) {
      if (k == "max_pairs") gb.max_pairs = v.get<uint64_t>();
      else if (k == "max_degree") gb.max_degree = v.get<uint32_t>();
      else if (k == "max_coeff_bits") gb.max_coeff_bits = v.get<uint64_t>();
      else if (k == "threads") gb.threads = v.get<unsigned>();
      else if (k == "ranking") ctx->ranking = v.get<std::vector<std::string>>();
      else if (k == "precision") ctx->opt.filter.precision = v.get<std::vector<unsigned>>();
      else if (k == "data_dir") ctx->data_dir = v.get<std::string>();
      else if (k == "report") ctx->report = v.get<std::string>();
      else throw hy::AlgebraError("config: unknown key '" + k + "'");
    }
    if (gb.max_pairs == 0 || gb.max_degree == 0 || gb.max_coeff_bits == 0 || gb.threads == 0)
      throw hy::AlgebraError("config: caps and threads must be positive");
    if (ctx->opt.filter.precision.empty()) throw hy::AlgebraError("config: empty precision ladder");
    for (unsigned p : ctx->opt.filter.precision)
      if (p < 64) throw hy::AlgebraError("config: precision below 64 bits");
    return HY_OK;
  });
}

hy_status hy_context_set_threads(hy_context* ctx, unsigned threads) {
  if (!ctx) return HY_INTERNAL_ERROR;
  if (threads == 0) {
    ctx->error = "thread count must be positive";
    return HY_INPUT_ERROR;
  }
  ctx->opt.gb.threads = threads;
  return HY_OK;
}

const char* hy_context_report_path(const hy_context* ctx) {
  return ctx && !ctx->report.empty() ? ctx->report.c_str() : nullptr;
}

const char* hy_last_error(const hy_context* ctx) { return ctx ? ctx->error.c_str() : "no context"; }

hy_status hy_check_file(hy_context* ctx, const char* path, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    std::string p = resolve(ctx, path);
    std::ostringstream os;
    if (ends_with(p, ".script")) {
      auto s = hy::load_script(p);
      auto db = hy::load_script_database(s);
      hy::check_script(s, db);
      os << p << ": " << s.steps.size() << " steps\n";
    } else if (ends_with(p, ".poly")) {
      auto s = hy::load_poly_system(p);
      os << p << ": " << s.gens.size() << " polynomials\n";
    } else {
      hy::Database db;
      std::vector<hy::LintIssue> lint;
      hy::load_file(db, p, &lint);
      if (!lint.empty()) {
        for (auto& l : lint) os << l.file << ":" << l.line << ":1: " << l.message << "\n";
        ctx->error = os.str();
        if (out) *out = dup(os.str());
        return HY_INPUT_ERROR;
      }
      os << p << ": " << db.rels.size() << " relations, " << db.gauges.size() << " gauges, " << db.rules.size()
         << " commutator rules\n";
    }
    if (out) *out = dup(os.str());
    return HY_OK;
  });
}

hy_status hy_replay(hy_context* ctx, const char* script_path, const char* steps, hy_step_callback cb, void* user,
                    hy_report** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    auto s = hy::load_script(resolve(ctx, script_path));
    if (s.ranking.empty()) s.ranking = ctx->ranking;
    auto db = hy::load_script_database(s);
    hy::check_script(s, db);
    hy::ReplayOptions ro;
    ro.step = ctx->opt;
    if (steps)
      for (auto& id : hy::split_list(steps))
        if (!id.empty()) ro.only.insert(id);
    if (cb)
      ro.progress = [&](const hy::StepReport& r) {
        cb(r.id.c_str(), hy::step_status_name(r.status), r.mode.c_str(), r.millis, user);
      };
    auto rep = std::make_unique<hy_report>(hy_report{hy::replay(s, db, ro)});
    const auto& R = rep->rep;
    hy_status st = R.pass ? HY_OK : R.any_fail() ? HY_VERIFY_FAILED : R.any_resource_limit() ? HY_RESOURCE_LIMIT : HY_VERIFY_FAILED;
    if (out) *out = rep.release();
    return st;
  });
}

int hy_report_passed(const hy_report* rep) { return rep && rep->rep.pass ? 1 : 0; }

size_t hy_report_step_count(const hy_report* rep) { return rep ? rep->rep.steps.size() : 0; }

const char* hy_report_step_id(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? s->id.c_str() : nullptr;
}

const char* hy_report_step_status(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? hy::step_status_name(s->status) : nullptr;
}

const char* hy_report_step_mode(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? s->mode.c_str() : nullptr;
}

const char* hy_report_step_digest(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? s->witness_digest.c_str() : nullptr;
}

const char* hy_report_step_witness(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? s->witness.c_str() : nullptr;
}

size_t hy_report_step_note_count(const hy_report* rep, size_t i) {
  auto* s = step_at(rep, i);
  return s ? s->notes.size() : 0;
}

const char* hy_report_step_note(const hy_report* rep, size_t i, size_t k) {
  auto* s = step_at(rep, i);
  return s && k < s->notes.size() ? s->notes[k].c_str() : nullptr;
}

char* hy_report_json(const hy_report* rep, int flags) {
  if (!rep) return nullptr;
  return dup(rep->rep.to_json(flags & HY_REPORT_WITNESS, flags & HY_REPORT_TIMINGS));
}

void hy_report_free(hy_report* rep) { delete rep; }

hy_status hy_groebner(hy_context* ctx, const char* poly_path, const char* order, const char* saturate, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    auto sys = hy::load_poly_system(resolve(ctx, poly_path));
    std::string ord = order ? order : "grevlex";
    if (ord != "lex" && ord != "grevlex") throw hy::AlgebraError("unknown order '" + ord + "'");
    std::vector<hy::Polynomial> all = sys.gens;
    std::optional<hy::Polynomial> h;
    if (saturate && *saturate) {
      hy::ExprContext c;
      c.declared = [&](const std::string& n) { return sys.db.declared.count(n) > 0; };
      h = hy::parse_expr(saturate, c);
      all.push_back(*h);
    }
    std::vector<hy::SymId> rk = ranking_for(sys.ranking.empty() ? ctx->ranking : sys.ranking, all);
    auto grevlex = hy::MonomialOrder::grevlex(rk);
    hy::GroebnerBasis G = h ? hy::saturate(sys.gens, *h, grevlex, ctx->opt.gb) : hy::buchberger(sys.gens, grevlex, ctx->opt.gb);
    if (ord == "lex") G = hy::buchberger(G.gens, hy::MonomialOrder::lex(rk), ctx->opt.gb);
    std::string text = hy::render(G);
    for (size_t i; (i = text.find("; ")) != std::string::npos;) text.replace(i, 2, "\n");
    if (out) *out = dup(text + "\n");
    return HY_OK;
  });
}

hy_status hy_reduce(hy_context* ctx, const char* expr, const char* by_path, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    auto sys = hy::load_poly_system(resolve(ctx, by_path));
    hy::ExprContext c;
    c.declared = [&](const std::string& n) { return sys.db.declared.count(n) > 0; };
    c.ref = [&](const std::string& n) -> std::optional<hy::Fraction> {
      const hy::Relation* r = sys.db.rels.find(n);
      if (!r) return std::nullopt;
      return r->value;
    };
    hy::Polynomial f = hy::parse_expr(expr, c);
    std::vector<hy::Polynomial> all = sys.gens;
    all.push_back(f);
    std::vector<hy::SymId> rk = ranking_for(sys.ranking.empty() ? ctx->ranking : sys.ranking, all);
    auto o = hy::MonomialOrder::grevlex(rk);
    hy::GroebnerBasis G = hy::buchberger(sys.gens, o, ctx->opt.gb);
    if (out) *out = dup(hy::render(hy::normal_form(f, G.gens, o), o) + "\n");
    return HY_OK;
  });
}

void hy_string_free(char* s) { std::free(s); }

}  // extern "C"
