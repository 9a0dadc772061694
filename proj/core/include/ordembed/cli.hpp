// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "ordembed/common.hpp"
#include "ordembed/derivation.hpp"

namespace ordembed {

/// One batch run. Exactly one of builtin ("NAME,P1,P2...") or order_file
/// must be set. Unset n_max defaults to the last domain element; unset
/// premise_cap defaults to the domain bound.
struct RunConfig {
  std::string command;  // validate | synth-check | extract | embed | extend | verify
  std::string builtin;
  std::string order_file;
  std::optional<Nat> n_max;
  Nat depth = 20;
  std::optional<Nat> premise_cap;
  Nat bruteforce_limit = 12;
  std::string output_path;
  std::optional<Nat> seed;  // overrides a random-dag builtin's seed parameter
  Nat node_budget = kDefaultNodeBudget;
  std::string mutate;  // "KIND@ADDR", e.g. "raise-ordinal@0/0"
  bool derive_ranks = false;
};

struct RunResult {
  int exit_code = 0;  // 0 clean, 1 violations, 2 faults
  std::string report;
};

/// Dispatches the command and assembles its plain-text report; identical
/// configs produce byte-identical reports. Violations turn into exit code 1;
/// pipeline faults are caught and reported as a FAULT line with exit code 2.
/// Bad configurations throw UsageError (callers print help); when
/// output_path is set the report is also written there.
RunResult run(const RunConfig& config);

}  // namespace ordembed
