// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ordembed/derivation.hpp"

namespace ordembed {

enum class CaseTag { Case1, Case21, Case22 };

/// "case1" | "case2.1" | "case2.2"
std::string to_string(CaseTag tag);

/// The node, ordinal bound and sequent extracted for m, together with how
/// they were reached: Case1 picks the root when nothing below m sits above
/// m; otherwise n0 is the least prior number above m with the smallest
/// extracted ordinal, and m descends from sigma_{n0} through a progression
/// premise (Case21, recording its main formula as n1) or a repetition
/// (Case22).
struct ExtractionRecord {
  Nat m = 0;
  Address sigma;
  Ordinal beta;
  Sequent gamma;
  CaseTag case_tag = CaseTag::Case1;
  std::optional<Nat> n0;
  std::optional<Nat> n1;

  /// Tab-separated: m, case tag, n0 or "-", address, beta, comma-joined
  /// gamma members.
  std::string table_line() const;
};

/// Memoized extraction over one tree. Records are immutable once computed;
/// each carries two loudly-checked invariants (counted below):
///   - every member n of gamma satisfies m = n or m below n;
///   - beta and gamma coincide with the ordinal and sequent stored at sigma.
/// Violations of either, an absent required child, a local-correctness
/// contradiction on a descended edge, an unsupported rule at sigma_{n0}, or
/// a progression whose main formula is not above m all throw TreeShapeError
/// naming the address and condition.
class Extraction {
 public:
  explicit Extraction(DerivationTree tree) : tree_(std::move(tree)) {}

  const ExtractionRecord& extract(Nat m);

  const DerivationTree& tree() const { return tree_; }
  const OrderSpec& order() const { return tree_.order(); }

  Nat eq2_checks() const { return eq2_checks_; }
  Nat coherence_checks() const { return coherence_checks_; }

 private:
  ExtractionRecord compute(Nat m);

  DerivationTree tree_;
  // Deque keeps references to filled records stable while the memo grows.
  std::deque<std::optional<ExtractionRecord>> memo_;
  Nat eq2_checks_ = 0;
  Nat coherence_checks_ = 0;
};

struct Lemma1Violation {
  Nat m = 0;
  Nat n = 0;
  Ordinal beta_m;
  Ordinal beta_n;
};

struct Lemma1Report {
  std::vector<Lemma1Violation> violations;
  Nat pairs_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks beta_m strictly below beta_n for every pair n < m <= n_max with m
/// below n in the order.
Lemma1Report verify_lemma1(Extraction& ex, Nat n_max);

}  // namespace ordembed
