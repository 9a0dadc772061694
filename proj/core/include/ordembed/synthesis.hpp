// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ordembed/derivation.hpp"
#include "ordembed/order.hpp"

namespace ordembed {

/// Builds the canonical lazy witness tree for an order with a rank function:
///   root <n>      - sequent {E(n)}, ord alpha0 = rank_bound, Rep;
///   <n,0>         - sequent {E(n)}, ord rank(n), Prg on n;
///   below a Prg on n*, child m (for m below n*) - sequent grown by E(m),
///   Prg on the minimum-rank member (ties to the least), ord its rank.
/// All other addresses are absent. Lookups throw MissingRankError without a
/// rank witness, and TreeShapeError when rank_bound fails to dominate the
/// rank of an inspected root.
DerivationTree synth_tree(const OrderSpec& o);

/// Variant with one extra repetition under every root, exercising chained
/// Rep steps in consumers: <n,0> repeats at ord rank(n)#1 and the Prg moves
/// to <n,0,0>. To keep the root edge sound when rank(n)#1 reaches
/// rank_bound, alpha0 is rank_bound#1.
DerivationTree synth_tree_delayed(const OrderSpec& o);

}  // namespace ordembed
