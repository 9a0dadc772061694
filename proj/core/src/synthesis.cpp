// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/synthesis.hpp"

#include <memory>
#include <unordered_map>

namespace ordembed {

namespace {

// Shared by every lookup of one synthesized tree. Lazy descents re-ask for
// the same member ranks constantly, so each evaluated rank is memoized;
// the map never discards entries, keeping references into it stable.
struct SynthState {
  OrderSpec order;
  Ordinal alpha0;
  bool delayed;
  std::unordered_map<Nat, Ordinal> rank_cache;

  SynthState(OrderSpec o, Ordinal a0, bool d)
      : order(std::move(o)), alpha0(std::move(a0)), delayed(d) {}

  const Ordinal& rank(Nat n) {
    auto it = rank_cache.find(n);
    if (it == rank_cache.end()) it = rank_cache.emplace(n, order.rank(n)).first;
    return it->second;
  }
};

// Tracks the member of a growing sequent with the smallest rank, ties to
// the least member. Folding members one at a time gives the same choice as
// a scan of the whole set, at one rank lookup per added member. On
// synthesized paths the freshly added premise always wins, but hostile rank
// functions are tolerated: the choice is total either way.
struct MinRankMember {
  Nat member;
  const Ordinal* rank;

  MinRankMember(SynthState& s, Nat first) : member(first), rank(&s.rank(first)) {}

  void add(SynthState& s, Nat m) {
    const Ordinal& r = s.rank(m);
    const auto c = compare(r, *rank);
    if (c == std::strong_ordering::less ||
        (c == std::strong_ordering::equal && m < member)) {
      member = m;
      rank = &r;
    }
  }
};

std::optional<NodeData> synth_lookup(SynthState& s, const Address& a) {
  const auto& path = a.path();
  if (path.empty()) return std::nullopt;

  const Nat n = path.front();
  NodeData node;
  node.seq = Sequent::singleton(n);
  node.ord = s.alpha0;
  node.rul = RuleTag::Rep;
  std::size_t i = 1;

  if (i < path.size()) {
    if (path[i] != 0) return std::nullopt;
    const Ordinal& r = s.rank(n);
    if (compare(r, s.order.rank_bound()) != std::strong_ordering::less) {
      throw TreeShapeError(Address(std::vector<Nat>{n}).to_string(), "rank-not-below-rank-bound",
                           n);
    }
    if (s.delayed) {
      node.ord = natural_sum(r, Ordinal::one());
      ++i;
      if (i < path.size()) {
        if (path[i] != 0) return std::nullopt;
        node.ord = r;
        node.rul = RuleTag::Prg;
        node.num = n;
        ++i;
      }
    } else {
      node.ord = r;
      node.rul = RuleTag::Prg;
      node.num = n;
      ++i;
    }
  }

  if (i < path.size()) {
    MinRankMember least(s, n);
    for (; i < path.size(); ++i) {
      if (node.rul != RuleTag::Prg) return std::nullopt;
      const Nat m = path[i];
      if (!s.order.relates(m, *node.num)) return std::nullopt;
      node.seq = node.seq.with(m);
      least.add(s, m);
      node.num = least.member;
    }
    node.ord = *least.rank;
  }
  return node;
}

DerivationTree make_tree(const OrderSpec& o, bool delayed) {
  if (!o.has_rank() || !o.has_rank_bound()) {
    throw MissingRankError("synthesis needs an order with a rank function and a rank bound");
  }
  Ordinal alpha0 = delayed ? natural_sum(o.rank_bound(), Ordinal::one()) : o.rank_bound();
  auto state = std::make_shared<SynthState>(o, alpha0, delayed);
  auto lookup = [state](const Address& a) { return synth_lookup(*state, a); };
  return DerivationTree(o, std::move(alpha0), std::move(lookup));
}

}  // namespace

DerivationTree synth_tree(const OrderSpec& o) { return make_tree(o, false); }

DerivationTree synth_tree_delayed(const OrderSpec& o) { return make_tree(o, true); }

}  // namespace ordembed