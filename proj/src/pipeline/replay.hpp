// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pipeline/steps.hpp"

namespace hy {

struct StepReport {
  std::string id;
  std::string paper_ref;
  std::string kind;
  StepStatus status = StepStatus::Skipped;
  std::string mode;  // verbatim, corrected or none
  std::string witness;
  std::string witness_digest;
  double millis = 0;
  bool resource_limited = false;
  std::vector<std::string> notes;
};

struct ReplayOptions {
  StepOptions step;
  // Empty runs every step.
  std::set<std::string> only;
  // Real wall times in the report; off keeps reports byte-identical across runs.
  bool timings = false;
  bool dump_witness = false;
  // Called after each step (progress output).
  std::function<void(const StepReport&)> progress;
};

struct Report {
  int version = 1;
  bool pass = true;
  std::vector<StepReport> steps;

  std::string to_json(bool with_witness = false, bool with_timings = false) const;
  bool any_fail() const;
  bool any_resource_limit() const;
};

std::string sha256_hex(const std::string& data);

Report replay(const ProofScript& script, const Database& db, const ReplayOptions& opt = {});
// {salvation, conj salvation, 1089 beta ~beta - alpha ~alpha}: every conjugation-consistent
// solution must have alpha = beta = 0.
StepReport final_contradiction_check(const Database& db, const std::vector<std::string>& system = {},
                                     const StepOptions& opt = {});

}  // namespace hy
