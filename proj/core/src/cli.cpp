// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/cli.hpp"

#include <fstream>
#include <sstream>

#include "ordembed/embedding.hpp"
#include "ordembed/extraction.hpp"
#include "ordembed/order.hpp"
#include "ordembed/synthesis.hpp"

namespace ordembed {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

Address parse_address(const std::string& text) {
  if (text.empty()) throw UsageError("empty tree address");
  std::vector<Nat> path;
  for (const std::string& part : split(text, '/')) {
    try {
      std::size_t used = 0;
      path.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad tree address component '" + part + "' in '" + text + "'");
    }
  }
  return Address(std::move(path));
}

struct Setup {
  OrderSpec order;
  std::string description;
  Nat n_max;
  Nat premise_cap;
  std::vector<std::string> warnings;
};

Setup prepare(const RunConfig& config) {
  if (config.builtin.empty() == config.order_file.empty()) {
    throw UsageError("exactly one of a builtin order or an order file is required");
  }

  std::vector<std::string> warnings;
  OrderSpec order = [&] {
    if (!config.builtin.empty()) {
      std::vector<std::string> parts = split(config.builtin, ',');
      std::string name = parts.front();
      std::vector<std::string> params(parts.begin() + 1, parts.end());
      if (config.seed) {
        if (name == "random-dag" && params.size() == 3) {
          params[1] = std::to_string(*config.seed);
        } else {
          warnings.push_back("seed ignored for order '" + name + "'");
        }
      }
      if (config.derive_ranks) {
        warnings.push_back("rank derivation ignored for builtin orders");
      }
      return make_builtin(name, params);
    }
    if (config.seed) warnings.push_back("seed ignored for file orders");
    return load_order_file(config.order_file, config.derive_ranks);
  }();

  Setup setup{order, "", 0, 0, std::move(warnings)};
  if (!config.builtin.empty()) {
    std::vector<std::string> parts = split(config.builtin, ',');
    if (config.seed && parts.front() == "random-dag" && parts.size() == 4) {
      parts[2] = std::to_string(*config.seed);
    }
    std::string desc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) desc += "," + parts[i];
    setup.description = desc;
  } else {
    setup.description = "file:" + config.order_file;
  }

  const Nat bound = order.domain_bound();
  setup.n_max = config.n_max ? *config.n_max : (bound == 0 ? 0 : bound - 1);
  setup.premise_cap = config.premise_cap ? *config.premise_cap : bound;
  if (setup.premise_cap < setup.n_max) {
    std::ostringstream w;
    w << "premise_cap " << setup.premise_cap << " below n_max " << setup.n_max
      << "; premises beyond the cap are skipped";
    setup.warnings.push_back(w.str());
  }
  return setup;
}

DerivationTree build_tree(const RunConfig& config, const Setup& setup) {
  DerivationTree tree = synth_tree(setup.order);
  if (!config.mutate.empty()) {
    auto at = config.mutate.find('@');
    if (at == std::string::npos) {
      throw UsageError("mutation must look like KIND@ADDR, got '" + config.mutate + "'");
    }
    MutationKind kind = parse_mutation_kind(config.mutate.substr(0, at));
    Address target = parse_address(config.mutate.substr(at + 1));
    tree = mutate_tree(tree, kind, target);
  }
  return tree;
}

std::vector<Nat> root_range(Nat n_max) {
  std::vector<Nat> roots(static_cast<std::size_t>(n_max) + 1);
  for (Nat n = 0; n <= n_max; ++n) roots[n] = n;
  return roots;
}

void render_order_violations(std::ostream& out, const ValidationReport& report) {
  for (const OrderViolation& v : report.violations) {
    out << "VIOLATION " << v.condition;
    for (Nat w : v.witness) out << ' ' << w;
    out << '\n';
  }
  out << "checked=" << report.checked << " violations=" << report.violations.size() << '\n';
}

void render_check(std::ostream& out, const CheckReport& report) {
  for (const Violation& v : report.violations) out << v.to_string() << '\n';
  out << report.summary() << '\n';
}

void render_lemma1(std::ostream& out, const Lemma1Report& report) {
  for (const Lemma1Violation& v : report.violations) {
    out << "LEMMA1 VIOLATION m=" << v.m << " n=" << v.n << " beta_m=" << v.beta_m.to_string()
        << " beta_n=" << v.beta_n.to_string() << '\n';
  }
}

void render_theorem(std::ostream& out, const TheoremReport& report) {
  for (const TheoremViolation& v : report.violations) {
    out << "THEOREM1 VIOLATION " << v.condition << " n=" << v.n << " m=" << v.m << '\n';
  }
  out << "pairs=" << report.pairs_checked << " bounds=" << report.bounds_checked
      << " violations=" << report.violations.size()
      << " strong-bound-held=" << (report.strong_bound_held ? "yes" : "no") << '\n';
}

void render_extension(std::ostream& out, const ExtensionReport& report) {
  for (const ExtensionViolation& v : report.violations) {
    out << "EXTENSION VIOLATION " << v.condition;
    for (Nat w : v.witness) out << ' ' << w;
    out << '\n';
  }
}

void render_sorted(std::ostream& out, const std::vector<Nat>& sorted) {
  out << "sorted:";
  for (Nat n : sorted) out << ' ' << n;
  out << '\n';
}

}  // namespace

RunResult run(const RunConfig& config) {
  const Setup setup = prepare(config);
  const OrderSpec& order = setup.order;
  const Nat n_max = setup.n_max;

  std::ostringstream out;
  out << "command=" << config.command << " order=" << setup.description
      << " domain=" << order.domain_bound() << " n_max=" << n_max;
  if (config.command == "synth-check" || config.command == "verify") {
    out << " depth=" << config.depth << " premise_cap=" << setup.premise_cap
        << " node_budget=" << config.node_budget;
  }
  if (config.command == "embed" || config.command == "verify") {
    out << " bruteforce_limit=" << config.bruteforce_limit;
  }
  out << '\n';
  for (const std::string& w : setup.warnings) out << "WARNING: " << w << '\n';

  bool violations = false;
  try {
    if (config.command == "validate") {
      ValidationReport report = validate(order, n_max);
      render_order_violations(out, report);
      violations = !report.ok();

    } else if (config.command == "synth-check") {
      DerivationTree tree = build_tree(config, setup);
      CheckReport report =
          check_truncated(tree, root_range(n_max), config.depth, setup.premise_cap,
                          config.node_budget);
      render_check(out, report);
      violations = !report.pass();

    } else if (config.command == "extract") {
      DerivationTree tree = build_tree(config, setup);
      Extraction ex(tree);
      for (Nat m = 0; m <= n_max; ++m) out << ex.extract(m).table_line() << '\n';
      Lemma1Report lemma1 = verify_lemma1(ex, n_max);
      render_lemma1(out, lemma1);
      out << "lemma1 pairs=" << lemma1.pairs_checked << " violations=" << lemma1.violations.size()
          << '\n';
      violations = !lemma1.ok();

    } else if (config.command == "embed") {
      DerivationTree tree = build_tree(config, setup);
      Extraction ex(tree);
      EmbeddingTable tab = f_dp(ex, n_max);
      for (Nat n = 0; n <= n_max; ++n) out << tab.table_line(n) << '\n';
      out << "alpha0=" << tab.alpha0.to_string() << '\n';
      out << "alpha1=" << tab.alpha1.to_string() << '\n';
      Nat mismatches = 0;
      Nat oracle_checked = 0;
      for (Nat n = 0; n <= n_max && n <= config.bruteforce_limit; ++n) {
        ++oracle_checked;
        Ordinal brute = f_bruteforce(ex, n, config.bruteforce_limit);
        if (!(brute == tab.f[n])) {
          ++mismatches;
          out << "ORACLE MISMATCH n=" << n << " dp=" << tab.f[n].to_string()
              << " brute=" << brute.to_string() << '\n';
        }
      }
      out << "oracle checked=" << oracle_checked << " mismatches=" << mismatches << '\n';
      violations = mismatches > 0;

    } else if (config.command == "extend") {
      DerivationTree tree = build_tree(config, setup);
      Extraction ex(tree);
      EmbeddingTable tab = f_dp(ex, n_max);
      std::vector<Nat> sorted = sorted_by_lt_prime(tab);
      render_sorted(out, sorted);
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        out << "pair " << sorted[i] << ' ' << sorted[i + 1] << '\n';
      }
      ExtensionReport report = verify_extension(tab, order, n_max);
      render_extension(out, report);
      out << "corollary checks=" << report.checks << " violations=" << report.violations.size()
          << '\n';
      violations = !report.ok();

    } else if (config.command == "verify") {
      DerivationTree tree = build_tree(config, setup);
      out << "alpha0=" << tree.alpha0().to_string() << '\n';
      out << "alpha1=" << alpha1_bound(tree.alpha0()).to_string() << '\n';

      out << "-- validate --\n";
      ValidationReport order_report = validate(order, n_max);
      render_order_violations(out, order_report);
      violations |= !order_report.ok();

      out << "-- synth-check --\n";
      CheckReport check = check_truncated(tree, root_range(n_max), config.depth,
                                          setup.premise_cap, config.node_budget);
      render_check(out, check);
      violations |= !check.pass();

      out << "-- extract --\n";
      Extraction ex(tree);
      for (Nat m = 0; m <= n_max; ++m) out << ex.extract(m).table_line() << '\n';

      out << "-- lemma1 --\n";
      Lemma1Report lemma1 = verify_lemma1(ex, n_max);
      render_lemma1(out, lemma1);
      out << "pairs=" << lemma1.pairs_checked << " violations=" << lemma1.violations.size()
          << '\n';
      violations |= !lemma1.ok();

      out << "-- embed --\n";
      EmbeddingTable tab = f_dp(ex, n_max);
      for (Nat n = 0; n <= n_max; ++n) {
        out << "beta(" << n << ")=" << tab.beta[n].to_string() << '\n';
      }
      for (Nat n = 0; n <= n_max; ++n) {
        out << "f(" << n << ")=" << tab.f[n].to_string() << '\n';
      }

      out << "-- theorem1 --\n";
      TheoremReport theorem = verify_theorem(tab, order, n_max);
      render_theorem(out, theorem);
      violations |= !theorem.ok();

      out << "-- corollary --\n";
      std::vector<Nat> sorted = sorted_by_lt_prime(tab);
      render_sorted(out, sorted);
      ExtensionReport extension = verify_extension(tab, order, n_max);
      render_extension(out, extension);
      out << "checks=" << extension.checks << " violations=" << extension.violations.size()
          << '\n';
      violations |= !extension.ok();

      out << "RESULT: " << (violations ? "FAIL" : "PASS") << '\n';

    } else {
      throw UsageError("unknown command '" + config.command +
                       "' (want validate | synth-check | extract | embed | extend | verify)");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    out << "FAULT: " << e.what() << '\n';
    RunResult result{2, out.str()};
    if (!config.output_path.empty()) {
      std::ofstream file(config.output_path);
      if (!file) throw UsageError("cannot write report to " + config.output_path);
      file << result.report;
    }
    return result;
  }

  RunResult result{violations ? 1 : 0, out.str()};
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw UsageError("cannot write report to " + config.output_path);
    file << result.report;
  }
  return result;
}

}  // namespace ordembed
