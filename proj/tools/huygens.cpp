// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "huygens.h"

namespace {

struct Ctx {
  hy_context* c = hy_context_new();
  ~Ctx() { hy_context_free(c); }
};

int report_error(hy_context* c, int st) {
  if (st != HY_OK) std::cerr << "huygens: " << hy_last_error(c) << "\n";
  return st;
}

void print_step(const char* id, const char* status, const char* mode, double millis, void*) {
  std::printf("%-22s %-12s %-10s %8.0f ms\n", id, status, mode, millis);
  std::fflush(stdout);
}

void print_out(char* s) {
  if (s) std::fputs(s, stdout);
  hy_string_free(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra engine and proof replay for the type III argument"};
  app.require_subcommand(1);
  std::string config;
  unsigned threads = 0;
  app.add_option("--config", config, "JSON config (overrides HUYGENS_CONFIG)");
  app.add_option("--threads", threads, "Worker threads for Groebner reductions")->check(CLI::PositiveNumber);

  auto* replay = app.add_subcommand("replay", "Replay a proof script");
  std::string script, report, steps;
  bool timings = false, dump = false, quiet = false;
  replay->add_option("script", script)->required();
  replay->add_option("--report", report, "Write the JSON report here");
  replay->add_option("--steps", steps, "Comma-separated step ids");
  replay->add_flag("--timings", timings, "Record wall times in the report");
  replay->add_flag("--dump-witness", dump, "Include witnesses in the report");
  replay->add_flag("-q,--quiet", quiet, "No per-step summary");

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of a polynomial system");
  std::string gb_file, order = "grevlex", sat;
  gb->add_option("file", gb_file)->required();
  gb->add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}));
  gb->add_option("--saturate", sat, "Saturate by this polynomial");

  auto* reduce = app.add_subcommand("reduce", "Normal form modulo a polynomial system");
  std::string expr, by;
  reduce->add_option("expr", expr)->required();
  reduce->add_option("--by", by)->required();

  auto* parse = app.add_subcommand("parse", "Parse and lint a data file");
  std::string parse_file;
  bool check = false;
  parse->add_option("file", parse_file)->required();
  parse->add_flag("--check", check, "Only validate; print nothing on success");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : HY_INPUT_ERROR;
  }

  Ctx ctx;
  if (!ctx.c) return HY_INTERNAL_ERROR;
  if (config.empty())
    if (const char* env = std::getenv("HUYGENS_CONFIG")) config = env;
  if (!config.empty())
    if (int st = hy_context_load_config(ctx.c, config.c_str())) return report_error(ctx.c, st);
  if (threads)
    if (int st = hy_context_set_threads(ctx.c, threads)) return report_error(ctx.c, st);

  if (*replay) {
    hy_report* rep = nullptr;
    int st = hy_replay(ctx.c, script.c_str(), steps.empty() ? nullptr : steps.c_str(), quiet ? nullptr : print_step,
                       nullptr, &rep);
    if (!rep) return report_error(ctx.c, st);
    if (!quiet) std::printf("verdict: %s\n", hy_report_passed(rep) ? "pass" : "fail");
    if (report.empty())
      if (const char* p = hy_context_report_path(ctx.c)) report = p;
    if (!report.empty()) {
      char* json = hy_report_json(rep, (timings ? HY_REPORT_TIMINGS : 0) | (dump ? HY_REPORT_WITNESS : 0));
      std::ofstream out(report, std::ios::binary);
      out << json;
      hy_string_free(json);
      if (!out) {
        std::cerr << "huygens: cannot write " << report << "\n";
        hy_report_free(rep);
        return HY_INPUT_ERROR;
      }
    }
    hy_report_free(rep);
    return st;
  }
  char* out = nullptr;
  int st = HY_OK;
  if (*gb) st = hy_groebner(ctx.c, gb_file.c_str(), order.c_str(), sat.empty() ? nullptr : sat.c_str(), &out);
  if (*reduce) st = hy_reduce(ctx.c, expr.c_str(), by.c_str(), &out);
  if (*parse) {
    st = hy_check_file(ctx.c, parse_file.c_str(), &out);
    if (st == HY_INPUT_ERROR && out) {
      std::fputs(out, stderr);
      hy_string_free(out);
      return st;
    }
  }
  if (*parse && check) {
    hy_string_free(out);
    out = nullptr;
  }
  print_out(out);
  return report_error(ctx.c, st);
}
