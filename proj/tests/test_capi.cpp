// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "huygens.h"

namespace {

std::string data(const char* f) { return std::string(HY_DATA_DIR) + "/" + f; }

std::string scratch(const char* name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / (std::string("hy_capi_") + name);
  std::ofstream(p) << body;
  return p.string();
}

std::string take(char* s) {
  std::string r = s ? s : "";
  hy_string_free(s);
  return r;
}

struct Ctx {
  hy_context* c = hy_context_new();
  ~Ctx() { hy_context_free(c); }
};

}  // namespace

TEST_CASE("check files") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(hy_check_file(ctx.c, data("np_field_equations.rel").c_str(), &out) == HY_OK);
  CHECK(take(out).find("29 relations") != std::string::npos);
  CHECK(hy_check_file(ctx.c, data("proof_typeIII.script").c_str(), &out) == HY_OK);
  take(out);
  CHECK(hy_check_file(ctx.c, scratch("bad.rel", "rel A paper: alpha = (   # ref: a\n").c_str(), &out) == HY_INPUT_ERROR);
  take(out);
  CHECK(std::string(hy_last_error(ctx.c)).find(":1:") != std::string::npos);
  CHECK(hy_check_file(ctx.c, "/nonexistent.rel", nullptr) == HY_INPUT_ERROR);
}

TEST_CASE("reduce and groebner") {
  Ctx ctx;
  std::string sys = scratch("s.poly", "var x y\nranking x y\nx - 1\nx^2 - y\n");
  char* out = nullptr;
  REQUIRE(hy_groebner(ctx.c, sys.c_str(), "lex", nullptr, &out) == HY_OK);
  CHECK(take(out) == "x - 1\ny - 1\n");
  REQUIRE(hy_reduce(ctx.c, "x^3 + y", sys.c_str(), &out) == HY_OK);
  CHECK(take(out) == "2\n");
  CHECK(hy_groebner(ctx.c, sys.c_str(), "elim", nullptr, &out) == HY_INPUT_ERROR);
  CHECK(hy_reduce(ctx.c, "x +", sys.c_str(), &out) == HY_INPUT_ERROR);
}

TEST_CASE("config") {
  Ctx ctx;
  CHECK(hy_context_load_config(ctx.c, scratch("ok.json", R"({"max_pairs": 5, "report": "r.json"})").c_str()) == HY_OK);
  CHECK(std::string(hy_context_report_path(ctx.c)) == "r.json");
  std::string sys = scratch("hard.poly", "var a b c\na^2*b - c\na*b^2 - a\nc^2 - a*b\na*c - 1\n");
  CHECK(hy_groebner(ctx.c, sys.c_str(), "grevlex", nullptr, nullptr) == HY_RESOURCE_LIMIT);
  CHECK(hy_context_load_config(ctx.c, scratch("unk.json", R"({"colour": 1})").c_str()) == HY_INPUT_ERROR);
  CHECK(hy_context_load_config(ctx.c, scratch("neg.json", R"({"max_degree": 0})").c_str()) == HY_INPUT_ERROR);
  CHECK(hy_context_load_config(ctx.c, scratch("syn.json", "{").c_str()) == HY_INPUT_ERROR);
  CHECK(hy_context_set_threads(ctx.c, 0) == HY_INPUT_ERROR);
}

TEST_CASE("replay with callback") {
  Ctx ctx;
  std::string script = scratch("t.script",
                               "step good triviality-check\n  ref: g\n  input: alpha, alpha - 1\n  expect: unit\n"
                               "step bad triviality-check\n  ref: b\n  input: alpha\n  expect: unit\n");
  std::vector<std::string> seen;
  auto cb = [](const char* id, const char* status, const char*, double, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(std::string(id) + ":" + status);
  };
  hy_report* rep = nullptr;
  CHECK(hy_replay(ctx.c, script.c_str(), nullptr, cb, &seen, &rep) == HY_VERIFY_FAILED);
  REQUIRE(rep);
  CHECK(seen == std::vector<std::string>{"good:pass", "bad:fail"});
  CHECK(hy_report_passed(rep) == 0);
  REQUIRE(hy_report_step_count(rep) == 2);
  CHECK(std::string(hy_report_step_id(rep, 1)) == "bad");
  CHECK(std::string(hy_report_step_digest(rep, 0)).rfind("sha256:", 0) == 0);
  CHECK(hy_report_step_id(rep, 2) == nullptr);
  std::string json = take(hy_report_json(rep, HY_REPORT_WITNESS));
  CHECK(json.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
  hy_report_free(rep);

  CHECK(hy_replay(ctx.c, script.c_str(), "good", nullptr, nullptr, &rep) == HY_OK);
  CHECK(hy_report_passed(rep) == 1);
  hy_report_free(rep);
  CHECK(hy_replay(ctx.c, "/nonexistent.script", nullptr, nullptr, nullptr, &rep) == HY_INPUT_ERROR);
  CHECK(rep == nullptr);
}
