// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#include "pipeline/replay.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <map>

#include "json.hpp"

namespace hy {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

bool Report::any_fail() const {
  for (auto& s : steps)
    if (s.status == StepStatus::Fail) return true;
  return false;
}

bool Report::any_resource_limit() const {
  for (auto& s : steps)
    if (s.resource_limited && s.status != StepStatus::Pass) return true;
  return false;
}

std::string Report::to_json(bool with_witness, bool with_timings) const {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["verdict"] = pass ? "pass" : "fail";
  j["steps"] = nlohmann::ordered_json::array();
  for (auto& s : steps) {
    nlohmann::ordered_json o;
    o["id"] = s.id;
    o["paper_ref"] = s.paper_ref;
    o["kind"] = s.kind;
    o["status"] = step_status_name(s.status);
    o["mode"] = s.mode;
    o["witness_digest"] = s.witness_digest;
    o["millis"] = with_timings ? static_cast<int64_t>(s.millis) : 0;
    o["notes"] = s.notes;
    if (with_witness) o["witness"] = s.witness;
    j["steps"].push_back(o);
  }
  return j.dump(2) + "\n";
}

namespace {

std::string status_line(const char* mode, const Outcome& o) {
  return std::string(mode) + ": " + step_status_name(o.status);
}

bool resource_note(const Outcome& o) {
  for (auto& n : o.notes)
    if (n.starts_with("resource limit exceeded")) return true;
  return false;
}

StepReport run_one(const ProofStep& st, const ProofScript& script, const Database& db, const StepOptions& opt) {
  StepReport r;
  r.id = st.id;
  r.paper_ref = st.ref;
  r.kind = step_kind_name(st.kind);
  if (st.kind == StepKind::Skip) {
    r.status = StepStatus::Skipped;
    r.mode = "none";
    r.notes.push_back(st.get("note"));
    return r;
  }
  Outcome chosen;
  if (st.dual()) {
    Outcome v = run_step(st, script, db, 0, opt);
    Outcome c = run_step(st, script, db, 1, opt);
    r.notes.push_back(status_line("verbatim", v));
    r.notes.push_back(status_line("corrected", c));
    if (v.status == StepStatus::Pass) {
      chosen = v;
      r.mode = "verbatim";
    } else {
      chosen = c;
      r.mode = "corrected";
      for (auto& n : v.notes) r.notes.push_back("verbatim: " + n);
    }
    r.resource_limited = resource_note(v) || resource_note(c);
  } else {
    chosen = run_step(st, script, db, 0, opt);
    r.mode = chosen.corrections.empty() ? "verbatim" : "corrected";
    r.resource_limited = resource_note(chosen);
  }
  r.status = chosen.status;
  for (auto& u : chosen.corrections) r.notes.push_back("uses " + u);
  for (auto& n : chosen.notes) r.notes.push_back(n);
  if (st.has("note")) r.notes.push_back(st.get("note"));
  r.witness = chosen.witness;
  return r;
}

}  // namespace

Report replay(const ProofScript& script, const Database& db, const ReplayOptions& opt) {
  for (auto& id : opt.only)
    if (!script.find(id)) throw SourceError(script.file, "unknown step '" + id + "'", 0, 0);
  Report rep;
  std::map<std::string, StepStatus> done;
  for (auto& st : script.steps) {
    if (!opt.only.empty() && !opt.only.count(st.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    StepReport r;
    std::string blocked;
    for (auto& d : st.after) {
      auto it = done.find(d);
      if (it == done.end()) {
        blocked = "dependency " + d + " not run";
      } else if (it->second != StepStatus::Pass) {
        blocked = "dependency " + d + " " + step_status_name(it->second);
      }
      if (!blocked.empty()) break;
    }
    if (!blocked.empty()) {
      r.id = st.id;
      r.paper_ref = st.ref;
      r.kind = step_kind_name(st.kind);
      r.status = StepStatus::Skipped;
      r.mode = "none";
      r.notes.push_back(blocked);
    } else {
      r = run_one(st, script, db, opt.step);
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.witness_digest = "sha256:" + sha256_hex(r.witness);
    done[st.id] = r.status;
    if (r.status == StepStatus::Fail || r.status == StepStatus::Inconclusive) rep.pass = false;
    if (opt.progress) opt.progress(r);
    rep.steps.push_back(std::move(r));
  }
  return rep;
}

StepReport final_contradiction_check(const Database& db, const std::vector<std::string>& system,
                                     const StepOptions& opt) {
  std::vector<std::string> names = system.empty() ? std::vector<std::string>{"salvation", "~salvation", "5.140.ab"} : system;
  std::string input;
  for (auto& n : names) input += (input.empty() ? "" : ", ") + n;
  ProofScript s = parse_script("ranking ~beta beta ~alpha alpha\n"
                               "step final filter-check\n"
                               "  ref: alpha = beta = 0\n"
                               "  gauge: none\n"
                               "  input: " + input + "\n"
                               "  vanish: alpha, beta\n",
                               "<final>");
  ReplayOptions ro;
  ro.step = opt;
  check_script(s, db);
  return replay(s, db, ro).steps.at(0);
}

}  // namespace hy
