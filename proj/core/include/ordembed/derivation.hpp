// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordembed/common.hpp"
#include "ordembed/order.hpp"
#include "ordembed/ordinal.hpp"

namespace ordembed {

/// A finite set of naturals n, each standing for the formula E(n) of the
/// single fresh predicate E. Set semantics; members kept sorted ascending.
class Sequent {
 public:
  Sequent() = default;
  explicit Sequent(std::vector<Nat> members);
  static Sequent singleton(Nat n) { return Sequent({n}); }

  bool contains(Nat n) const;
  /// This set united with {n}.
  Sequent with(Nat n) const;
  /// This set minus {n}.
  Sequent without(Nat n) const;

  const std::vector<Nat>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool operator==(const Sequent&) const = default;

 private:
  std::vector<Nat> members_;
};

/// Inference tags. Only Prg (progression: conclude E(n) from E(m) for every
/// m below n) and Rep (repetition: copy the sequent, shrink the ordinal) are
/// supported; the remaining tags exist so checkers can reject them.
enum class RuleTag { Prg, Rep, Or, And, Exists, Forall, Cut };

std::string to_string(RuleTag tag);

/// The five data attached to a tree node: sequent, ordinal bound, rule,
/// cut rank, and (for Prg) the main-formula index. In the supported cut-free
/// fragment crk is always 0 and num is present exactly on Prg nodes.
struct NodeData {
  Sequent seq;
  Ordinal ord;
  RuleTag rul = RuleTag::Rep;
  Nat crk = 0;
  std::optional<Nat> num;

  bool operator==(const NodeData&) const = default;
};

/// A position in the tree: the finite sequence of child indices from the
/// root. The child of a via index i is a.child(i).
class Address {
 public:
  Address() = default;
  explicit Address(std::vector<Nat> path) : path_(std::move(path)) {}

  Address child(Nat i) const;
  const std::vector<Nat>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }

  /// Slash-separated indices ("0/0/2"); the root renders as "-".
  std::string to_string() const;

  bool operator==(const Address&) const = default;

 private:
  std::vector<Nat> path_;
};

/// A lazy, possibly infinitely branching derivation tree: a pure lookup from
/// addresses to node data, together with the order governing Prg premises
/// and the uniform root ordinal alpha0. Lookup at the root address returns
/// absent (nothing reads it); lookups must be deterministic.
class DerivationTree {
 public:
  using LookupFn = std::function<std::optional<NodeData>(const Address&)>;

  DerivationTree(OrderSpec order, Ordinal alpha0, LookupFn lookup)
      : order_(std::move(order)), alpha0_(std::move(alpha0)), lookup_(std::move(lookup)) {}

  const OrderSpec& order() const { return order_; }
  const Ordinal& alpha0() const { return alpha0_; }

  std::optional<NodeData> node(const Address& a) const { return lookup_(a); }

 private:
  OrderSpec order_;
  Ordinal alpha0_;
  LookupFn lookup_;
};

/// One failed local side condition, located at an address, optionally with
/// the premise index it concerns.
struct Violation {
  Address address;
  std::string condition;
  std::optional<Nat> witness;

  /// "VIOLATION <address> <condition> [witness m]"
  std::string to_string() const;
};

struct NodeCheck {
  std::vector<Violation> violations;
  Nat checked_premises = 0;
  /// Prg premises beyond the premise cap; counted, never silently passed.
  Nat skipped_premises = 0;

  bool pass() const { return violations.empty(); }
};

/// Verifies the local side conditions at one present node:
///   Rep - child 0 present, same sequent, smaller ordinal, same cut rank.
///   Prg - num present and in the sequent; for every premise m below num
///         with m <= premise_cap: child m present with the sequent extended
///         by m, a smaller ordinal, and the same cut rank.
/// Any other rule tag or a nonzero cut rank is a violation.
NodeCheck check_node(const DerivationTree& t, const Address& a, Nat premise_cap);

struct CheckReport {
  std::vector<Violation> violations;
  Nat checked = 0;
  Nat skipped = 0;

  bool pass() const { return violations.empty(); }
  /// "checked=N violations=M skipped=K"
  std::string summary() const;
};

inline constexpr Nat kDefaultNodeBudget = 100000;

/// Breadth-first sweep of check_node over every address reachable from the
/// roots (ascending) within `depth` steps, following Prg children only for
/// premise indices <= premise_cap. Also verifies the root convention
/// ({E(n)}, alpha0, crk 0) at each root. At most node_budget nodes are
/// visited; nodes cut off by the budget are counted as skipped, as are
/// premises beyond the cap.
CheckReport check_truncated(const DerivationTree& t, const std::vector<Nat>& roots, Nat depth,
                            Nat premise_cap, Nat node_budget = kDefaultNodeBudget);

/// The catalog of single-node corruptions used to exercise the checker; each
/// is guaranteed to be caught by check_truncated with a located witness.
enum class MutationKind {
  RaiseOrdinal,    // premise ordinal raised to its parent's (no longer smaller)
  DropNum,         // main formula removed from a Prg node's sequent
  ChangeSequent,   // spurious member added to the sequent
  BreakRoot,       // root ordinal bumped away from alpha0
  BadRule,         // rule tag replaced by unsupported Cut
};

/// Parses the CLI spelling: raise-ordinal | drop-num | change-sequent |
/// break-root | bad-rule. Throws UsageError otherwise.
MutationKind parse_mutation_kind(const std::string& text);

std::string to_string(MutationKind kind);

/// Lazy overlay applying `kind` to the node at `target`; every other address
/// reads through to the base tree.
DerivationTree mutate_tree(const DerivationTree& t, MutationKind kind, const Address& target);

}  // namespace ordembed
