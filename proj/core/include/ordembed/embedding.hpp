// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ordembed/extraction.hpp"

namespace ordembed {

/// The computed embedding over {0..n_max}: for each n, the extracted ordinal
/// beta[n], the best chain-sum gamma[n] strictly below n (0 if none), and
/// f[n] = w^beta[n] # gamma[n]. alpha0 is the tree's root ordinal and
/// alpha1 = w^(alpha0 + 1) the strict ceiling of every f value.
struct EmbeddingTable {
  Nat n_max = 0;
  std::vector<Ordinal> beta;
  std::vector<Ordinal> gamma;
  std::vector<Ordinal> f;
  Ordinal alpha0;
  Ordinal alpha1;

  /// Tab-separated: n, beta, gamma, f.
  std::string table_line(Nat n) const;
};

/// Computes the table exactly by per-target dynamic programming: for each
/// n, vertices {0..n-1} are swept in a topological order of the restricted
/// relation (least index first among the ready), accumulating the best
/// chain-sum g per vertex; gamma[n] is the best g over predecessors of n.
/// Throws CycleError if the restriction is not acyclic.
EmbeddingTable f_dp(Extraction& ex, Nat n_max);

/// Independent oracle for one value: exhaustively enumerates every chain
/// ending at n whose other elements lie below n, returning the largest
/// natural sum of w^beta over the chain. Exponential; refuses n beyond
/// `limit` with UsageError. Throws logic_error if a chain would revisit an
/// element (the order is then no strict partial order).
Ordinal f_bruteforce(Extraction& ex, Nat n, Nat limit = 12);

/// w^(alpha0 + 1).
Ordinal alpha1_bound(const Ordinal& alpha0);

/// The linear extension: f(n) below f(m), or equal f and n < m.
/// Arguments beyond tab.n_max throw out_of_range.
bool lt_prime(const EmbeddingTable& tab, Nat n, Nat m);

/// Lexicographic comparison of the pairs (f(n), n) and (f(m), m); coded
/// apart from lt_prime as a cross-check of the same order.
bool lex_precedes(const EmbeddingTable& tab, Nat n, Nat m);

struct TheoremViolation {
  std::string condition;
  Nat n = 0;
  Nat m = 0;
};

struct TheoremReport {
  std::vector<TheoremViolation> violations;
  Nat pairs_checked = 0;
  Nat bounds_checked = 0;
  /// Whether every f value also stayed below w^alpha0, the bound the
  /// ceiling definition rounds up from; reported, not required.
  bool strong_bound_held = true;

  bool ok() const { return violations.empty(); }
};

/// For every pair n below m in the order: f(n) strictly below f(m)
/// ("f-not-monotone" otherwise), and for every m: f(m) strictly below
/// alpha1 ("f-exceeds-alpha1").
TheoremReport verify_theorem(const EmbeddingTable& tab, const OrderSpec& o, Nat n_max);

struct ExtensionViolation {
  std::string condition;
  std::vector<Nat> witness;
};

struct ExtensionReport {
  std::vector<ExtensionViolation> violations;
  Nat checks = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks that lt_prime is a strict linear order extending the base order
/// and agreeing with the lexicographic embedding n -> (f(n), n):
/// totality, irreflexivity, transitivity (full triple loop), extension,
/// and lt_prime/lex_precedes agreement on every ordered pair.
ExtensionReport verify_extension(const EmbeddingTable& tab, const OrderSpec& o, Nat n_max);

/// {0..n_max} sorted ascending by lt_prime.
std::vector<Nat> sorted_by_lt_prime(const EmbeddingTable& tab);

}  // namespace ordembed
