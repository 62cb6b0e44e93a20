// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "json.hpp"
#include "pipeline/replay.hpp"
#include "testdata.hpp"

using hy::StepStatus;

namespace {

hy::Report run(const std::string& text, const std::set<std::string>& only = {}) {
  auto s = hy::parse_script(text, "inline.script");
  auto db = hy::load_script_database(s);
  hy::check_script(s, db);
  hy::ReplayOptions o;
  o.only = only;
  return hy::replay(s, db, o);
}

std::string loads() {
  return "load " + hy::test::data("np_field_equations.rel") + " " + hy::test::data("gauge_typeIII.rel") + " " +
         hy::test::data("paper_section2.rel") + "\n";
}

}  // namespace

TEST_CASE("empty script passes") {
  auto r = run("");
  CHECK(r.pass);
  CHECK(r.steps.empty());
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["version"] == 1);
  CHECK(j["verdict"] == "pass");
  CHECK(j["steps"].empty());
}

TEST_CASE("a false claim fails its step") {
  auto r = run(
      "step one triviality-check\n"
      "  ref: 1 in <alpha>\n"
      "  input: alpha\n"
      "  expect: unit\n");
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].status == StepStatus::Fail);
  CHECK(!r.pass);
  CHECK(r.any_fail());
}

TEST_CASE("dependents of a failing or unselected step are skipped") {
  const std::string text =
      "step a triviality-check\n"
      "  ref: a\n"
      "  input: alpha, alpha - 1\n"
      "  expect: unit\n"
      "step b triviality-check\n"
      "  ref: b\n"
      "  after: a\n"
      "  input: beta, beta - 1\n"
      "  expect: unit\n"
      "step c triviality-check\n"
      "  ref: c\n"
      "  input: pi\n"
      "  expect: unit\n"
      "step d triviality-check\n"
      "  ref: d\n"
      "  after: c\n"
      "  input: 1\n"
      "  expect: unit\n";
  auto all = run(text);
  REQUIRE(all.steps.size() == 4);
  CHECK(all.steps[0].status == StepStatus::Pass);
  CHECK(all.steps[1].status == StepStatus::Pass);
  CHECK(all.steps[2].status == StepStatus::Fail);
  CHECK(all.steps[3].status == StepStatus::Skipped);

  auto sub = run(text, {"b"});
  REQUIRE(sub.steps.size() == 1);
  CHECK(sub.steps[0].id == "b");
  CHECK(sub.steps[0].status == StepStatus::Skipped);
  CHECK(sub.steps[0].notes.at(0) == "dependency a not run");
  CHECK(sub.pass);
  CHECK_THROWS(run(text, {"nope"}));
}

TEST_CASE("script diagnostics") {
  CHECK_THROWS_AS(hy::parse_script("step a frobnicate\n  ref: x\n", "k.script"), hy::ParseError);
  CHECK_THROWS_AS(hy::parse_script("step a skip\n  ref: x\nstep a skip\n  ref: y\n", "k.script"), hy::ParseError);
  CHECK_THROWS_AS(hy::parse_script("step a skip\n  ref: x\n  after: b\n", "k.script"), hy::ParseError);
  CHECK_THROWS_AS(hy::parse_script("step a triviality-check\n  ref: x\n  input: x\n", "k.script"), hy::ParseError);
  auto s = hy::parse_script("step a triviality-check\n  ref: x\n  input: [nosuch]\n  expect: unit\n", "k.script");
  CHECK_THROWS_AS(hy::check_script(s, hy::Database{}), hy::ParseError);
}

TEST_CASE("dual mode records which reading passed") {
  auto r = run(loads() +
               "step s pfaffian-check\n"
               "  ref: sources\n"
               "  sources: NP25\n"
               "  expect: span 5.89|5.89.corr\n");
  REQUIRE(r.steps.size() == 1);
  const auto& st = r.steps[0];
  CHECK(st.status == StepStatus::Pass);
  CHECK(st.mode == "corrected");
  bool itemized = false;
  for (auto& n : st.notes) itemized = itemized || n.find("5.89.corr") != std::string::npos;
  CHECK(itemized);
}

TEST_CASE("single shipped steps") {
  auto s = hy::load_script(hy::test::data("proof_typeIII.script"));
  auto db = hy::load_script_database(s);
  hy::check_script(s, db);
  CHECK(s.steps.size() >= 30);
  hy::ReplayOptions o;
  o.only = {"src.5.88", "solve.5.97", "hom.S1", "hom.S2", "hom.S3", "case.d4.factor", "case.abpi"};
  auto r = hy::replay(s, db, o);
  CHECK(r.steps.size() == o.only.size());
  for (auto& st : r.steps) {
    INFO(st.id);
    CHECK(st.status == (st.id == "case.abpi" ? StepStatus::Skipped : StepStatus::Pass));
    CHECK(st.witness_digest.rfind("sha256:", 0) == 0);
  }
  auto j = nlohmann::json::parse(r.to_json());
  for (auto& st : j["steps"])
    for (const char* k : {"id", "paper_ref", "status", "mode", "witness_digest", "millis"}) CHECK(st.contains(k));
}

TEST_CASE("final contradiction") {
  const auto& db = hy::test::shipped();
  CHECK(hy::final_contradiction_check(db).status == StepStatus::Pass);
  CHECK(hy::final_contradiction_check(db, {"0", "0", "5.140.ab"}).status == StepStatus::Fail);
  CHECK(hy::final_contradiction_check(db, {"alpha", "beta"}).status == StepStatus::Pass);
}

TEST_CASE("report digests") {
  CHECK(hy::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
