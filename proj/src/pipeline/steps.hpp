// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "grobner/gb.hpp"
#include "grobner/solve.hpp"
#include "pipeline/script.hpp"

namespace hy {

enum class StepStatus { Pass, Fail, Inconclusive, Skipped };

const char* step_status_name(StepStatus s);

struct StepOptions {
  GbConfig gb;
  FilterOptions filter;
};

struct Outcome {
  StepStatus status = StepStatus::Fail;
  std::string witness;
  std::vector<std::string> notes;
  // Corrected-form and assumption relations the mode consumed.
  std::vector<std::string> corrections;
};

// mode 0 takes the left alternative of every "A|B", mode 1 the right.
Outcome run_step(const ProofStep& step, const ProofScript& script, const Database& db, int mode,
                 const StepOptions& opt);
// Resolves every name and expression of the step without computing; throws on error.
void validate_step(const ProofStep& step, const ProofScript& script, const Database& db, int mode);

}  // namespace hy
