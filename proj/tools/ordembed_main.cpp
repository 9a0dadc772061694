// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ordembed/cli.hpp"
#include "ordembed/common.hpp"
#include "ordembed/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ordinal embedding toolkit: validates orders, checks synthesized "
               "derivation trees, and verifies the embedding pipeline"};
  app.get_formatter()->column_width(30);

  ordembed::RunConfig config;
  app.add_option("command", config.command,
                 "one of: validate | synth-check | extract | embed | extend | verify")
      ->required()
      ->check(CLI::IsMember(
          {"validate", "synth-check", "extract", "embed", "extend", "verify"}));
  auto* builtin = app.add_option("--builtin", config.builtin,
                                 "builtin order, e.g. reverse-initial,5 or "
                                 "random-dag,50,7,0.3");
  auto* file = app.add_option("--order-file", config.order_file,
                              "path to an order description file");
  builtin->excludes(file);
  app.add_option("--n-max", config.n_max,
                 "largest domain element processed (default: domain bound - 1)");
  app.add_option("--depth", config.depth, "tree check depth for synth-check/verify")
      ->capture_default_str();
  app.add_option("--premise-cap", config.premise_cap,
                 "largest premise witness explored per node (default: domain bound)");
  app.add_option("--bruteforce-limit", config.bruteforce_limit,
                 "largest n cross-checked against the exponential embedding")
      ->capture_default_str();
  app.add_option("--node-budget", config.node_budget,
                 "maximum nodes enqueued during a tree check")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "overrides a random-dag builtin's seed");
  app.add_option("--mutate", config.mutate,
                 "inject a defect, KIND@ADDR with KIND one of raise-ordinal | "
                 "drop-num | change-sequent | break-root | bad-rule");
  app.add_flag("--derive-ranks", config.derive_ranks,
               "derive longest-chain ranks for a rank-less order file");
  app.add_option("--out", config.output_path, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ordembed::RunResult result = ordembed::run(config);
    std::cout << result.report;
    return result.exit_code;
  } catch (const ordembed::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
