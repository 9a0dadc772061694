// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordembed/common.hpp"
#include "ordembed/errors.hpp"
#include "ordembed/ordinal.hpp"

namespace ordembed {

/// A decidable strict partial order on an initial segment of the naturals,
/// optionally equipped with an ordinal rank witness.
///
/// `relates(m, n)` means m comes strictly below n. Numbers at or beyond
/// `domain_bound` are isolated: the wrapper forces relates to false there and
/// rank to 0, so decision and rank functions only ever see arguments below
/// the bound. Irreflexivity, transitivity and rank monotonicity are promises
/// checked by `validate`, not enforced per call.
class OrderSpec {
 public:
  using RelatesFn = std::function<bool(Nat, Nat)>;
  using RankFn = std::function<Ordinal(Nat)>;

  OrderSpec(std::string name, Nat domain_bound, RelatesFn relates)
      : name_(std::move(name)), domain_bound_(domain_bound), relates_(std::move(relates)) {}

  OrderSpec(std::string name, Nat domain_bound, RelatesFn relates, RankFn rank,
            std::optional<Ordinal> rank_bound)
      : name_(std::move(name)),
        domain_bound_(domain_bound),
        relates_(std::move(relates)),
        rank_(std::move(rank)),
        rank_bound_(std::move(rank_bound)) {}

  /// Copy of this order with a rank witness attached (replacing any present).
  OrderSpec with_rank(RankFn rank, std::optional<Ordinal> rank_bound) const {
    return OrderSpec(name_, domain_bound_, relates_, std::move(rank), std::move(rank_bound));
  }

  /// Copy of this order with the decision function replaced; for building
  /// deliberately broken orders in tests.
  OrderSpec with_relates(RelatesFn relates) const {
    OrderSpec copy = *this;
    copy.relates_ = std::move(relates);
    return copy;
  }

  const std::string& name() const { return name_; }
  Nat domain_bound() const { return domain_bound_; }

  /// m strictly below n; false whenever either argument is isolated.
  bool relates(Nat m, Nat n) const {
    if (m >= domain_bound_ || n >= domain_bound_) return false;
    return relates_(m, n);
  }

  bool has_rank() const { return static_cast<bool>(rank_); }
  bool has_rank_bound() const { return rank_bound_.has_value(); }

  /// rank(n); 0 for isolated n. Throws MissingRankError without a rank.
  Ordinal rank(Nat n) const {
    if (!rank_) throw MissingRankError("order '" + name_ + "' carries no rank function");
    if (n >= domain_bound_) return Ordinal::zero();
    return rank_(n);
  }

  /// The intended strict upper bound on all ranks; requires has_rank_bound().
  const Ordinal& rank_bound() const { return rank_bound_.value(); }

 private:
  std::string name_;
  Nat domain_bound_;
  RelatesFn relates_;
  RankFn rank_;
  std::optional<Ordinal> rank_bound_;
};

/// One broken promise found by validate. `witness` holds the numbers
/// involved: (n) for irreflexivity and rank-bound, (m, n) for
/// rank-monotonicity, (n, m, k) for transitivity.
struct OrderViolation {
  std::string condition;
  std::vector<Nat> witness;
};

struct ValidationReport {
  std::vector<OrderViolation> violations;
  Nat checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Transitive closure of the edge set as an order with domain_bound =
/// 1 + max vertex (0 for no edges); no rank attached. Throws CycleError if
/// the closure would relate a vertex to itself.
OrderSpec from_edges(const std::vector<std::pair<Nat, Nat>>& edges);

/// Checks irreflexivity for n <= n_max, transitivity for all triples
/// <= n_max, and, when a rank is attached, strict rank monotonicity over
/// related pairs <= n_max plus rank_bound domination. All violations are
/// reported with witnesses, in ascending witness order.
ValidationReport validate(const OrderSpec& o, Nat n_max);

/// Built-in test orders:
///   reverse-initial k    - domain {0..k}; i below j iff j < i; rank(i) = k-i.
///   divisibility N       - n encodes n+1; proper divisibility; rank = prime
///                          factor count with multiplicity; bound w.
///   lex-pairs N          - n decodes to (a,b) by Cantor pairing;
///                          lexicographic; rank = w*a + b; bound w^2.
///   finite-subsets w     - n < 2^w as bitmask; proper subset; rank =
///                          popcount; bound w.
///   random-dag size seed p - edges sampled from larger to smaller index
///                          with probability p, transitively closed; rank =
///                          longest chain strictly below; bound size+1.
OrderSpec reverse_initial(Nat k);
OrderSpec divisibility_order(Nat n);
OrderSpec lex_pairs(Nat n);
OrderSpec finite_subsets(Nat width);
OrderSpec random_dag(Nat size, Nat seed, double p);

/// Dispatches on a builtin name with decimal (or, for p, real) parameters.
/// Throws UsageError on an unknown name or bad parameter list.
OrderSpec make_builtin(const std::string& name, const std::vector<std::string>& params);

/// Cantor pairing: encode(a,b) = (a+b)(a+b+1)/2 + b; decode inverts it.
Nat cantor_encode(Nat a, Nat b);
std::pair<Nat, Nat> cantor_decode(Nat n);

/// Loads the line-oriented order file format:
///   line 1:  "order"
///   edges:   "edge A B"          (A below B, before closure)
///   ranks:   "rank N ORD"        (optional; ORD in ordinal notation)
///   bound:   "rankbound ORD"     (optional)
/// "#" starts a comment; blank lines are skipped. The loader closes the edge
/// set transitively and rejects cycles. With derive_ranks, ranks are computed
/// as longest-chain length below each vertex (rejected if the file already
/// carries rank lines). ParseError positions are 1-based line numbers.
OrderSpec load_order_file(const std::string& path, bool derive_ranks = false);

}  // namespace ordembed
