// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/derivation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ordembed {

Sequent::Sequent(std::vector<Nat> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Sequent::contains(Nat n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

Sequent Sequent::with(Nat n) const {
  if (contains(n)) return *this;
  Sequent out = *this;
  out.members_.insert(std::upper_bound(out.members_.begin(), out.members_.end(), n), n);
  return out;
}

Sequent Sequent::without(Nat n) const {
  Sequent out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), n);
  if (it != out.members_.end() && *it == n) out.members_.erase(it);
  return out;
}

std::string to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::Prg: return "Prg";
    case RuleTag::Rep: return "Rep";
    case RuleTag::Or: return "Or";
    case RuleTag::And: return "And";
    case RuleTag::Exists: return "Exists";
    case RuleTag::Forall: return "Forall";
    case RuleTag::Cut: return "Cut";
  }
  return "?";
}

Address Address::child(Nat i) const {
  std::vector<Nat> path = path_;
  path.push_back(i);
  return Address(std::move(path));
}

std::string Address::to_string() const {
  if (path_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i > 0) out += '/';
    out += std::to_string(path_[i]);
  }
  return out;
}

std::string Violation::to_string() const {
  std::string out = "VIOLATION " + address.to_string() + " " + condition;
  if (witness) out += " witness " + std::to_string(*witness);
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << "checked=" << checked << " violations=" << violations.size() << " skipped=" << skipped;
  return out.str();
}

namespace {

void check_edge(const DerivationTree& t, const Address& a, const NodeData& parent,
                const Sequent& expected_seq, Nat index, NodeCheck& result) {
  auto child = t.node(a.child(index));
  if (!child) {
    result.violations.push_back({a, "premise-absent", index});
    return;
  }
  ++result.checked_premises;
  if (child->seq != expected_seq) {
    result.violations.push_back({a, "premise-sequent-mismatch", index});
  }
  if (compare(child->ord, parent.ord) != std::strong_ordering::less) {
    result.violations.push_back({a, "premise-ordinal-not-smaller", index});
  }
  if (child->crk != parent.crk) {
    result.violations.push_back({a, "premise-cut-rank-mismatch", index});
  }
}

}  // namespace

NodeCheck check_node(const DerivationTree& t, const Address& a, Nat premise_cap) {
  NodeCheck result;
  auto node = t.node(a);
  if (!node) {
    result.violations.push_back({a, "node-absent", std::nullopt});
    return result;
  }
  const NodeData& data = *node;

  if (data.crk != 0) result.violations.push_back({a, "nonzero-cut-rank", std::nullopt});

  switch (data.rul) {
    case RuleTag::Rep: {
      if (data.num) result.violations.push_back({a, "unexpected-num", *data.num});
      check_edge(t, a, data, data.seq, 0, result);
      break;
    }
    case RuleTag::Prg: {
      if (!data.num) {
        result.violations.push_back({a, "num-missing", std::nullopt});
        break;
      }
      const Nat n = *data.num;
      if (!data.seq.contains(n)) result.violations.push_back({a, "main-formula-absent", n});
      for (Nat m = 0; m < t.order().domain_bound(); ++m) {
        if (!t.order().relates(m, n)) continue;
        if (m > premise_cap) {
          ++result.skipped_premises;
          continue;
        }
        check_edge(t, a, data, data.seq.with(m), m, result);
      }
      break;
    }
    default:
      result.violations.push_back({a, "unsupported-rule", std::nullopt});
      break;
  }
  return result;
}

CheckReport check_truncated(const DerivationTree& t, const std::vector<Nat>& roots, Nat depth,
                            Nat premise_cap, Nat node_budget) {
  CheckReport report;

  std::vector<Nat> sorted_roots = roots;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  sorted_roots.erase(std::unique(sorted_roots.begin(), sorted_roots.end()), sorted_roots.end());

  std::deque<std::pair<Address, Nat>> queue;
  Nat enqueued = 0;
  auto try_enqueue = [&](Address a, Nat d) {
    if (enqueued >= node_budget) {
      ++report.skipped;
      return;
    }
    queue.emplace_back(std::move(a), d);
    ++enqueued;
  };

  for (Nat n : sorted_roots) {
    Address root(std::vector<Nat>{n});
    auto node = t.node(root);
    if (!node) {
      report.violations.push_back({root, "root-absent", std::nullopt});
      continue;
    }
    if (node->seq != Sequent::singleton(n)) {
      report.violations.push_back({root, "root-sequent-mismatch", std::nullopt});
    }
    if (node->ord != t.alpha0()) {
      report.violations.push_back({root, "root-ordinal-mismatch", std::nullopt});
    }
    if (node->crk != 0) {
      report.violations.push_back({root, "root-cut-rank-mismatch", std::nullopt});
    }
    try_enqueue(root, 0);
  }

  while (!queue.empty()) {
    auto [a, d] = queue.front();
    queue.pop_front();

    NodeCheck node_check = check_node(t, a, premise_cap);
    ++report.checked;
    report.skipped += node_check.skipped_premises;
    for (Violation& v : node_check.violations) report.violations.push_back(std::move(v));

    if (d >= depth) continue;
    auto node = t.node(a);
    if (!node) continue;
    if (node->rul == RuleTag::Rep) {
      if (t.node(a.child(0))) try_enqueue(a.child(0), d + 1);
    } else if (node->rul == RuleTag::Prg && node->num) {
      for (Nat m = 0; m < t.order().domain_bound(); ++m) {
        if (m > premise_cap) break;
        if (!t.order().relates(m, *node->num)) continue;
        if (t.node(a.child(m))) try_enqueue(a.child(m), d + 1);
      }
    }
  }
  return report;
}

MutationKind parse_mutation_kind(const std::string& text) {
  if (text == "raise-ordinal") return MutationKind::RaiseOrdinal;
  if (text == "drop-num") return MutationKind::DropNum;
  if (text == "change-sequent") return MutationKind::ChangeSequent;
  if (text == "break-root") return MutationKind::BreakRoot;
  if (text == "bad-rule") return MutationKind::BadRule;
  throw UsageError("unknown mutation kind '" + text +
                   "' (want raise-ordinal | drop-num | change-sequent | break-root | bad-rule)");
}

std::string to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::RaiseOrdinal: return "raise-ordinal";
    case MutationKind::DropNum: return "drop-num";
    case MutationKind::ChangeSequent: return "change-sequent";
    case MutationKind::BreakRoot: return "break-root";
    case MutationKind::BadRule: return "bad-rule";
  }
  return "?";
}

DerivationTree mutate_tree(const DerivationTree& t, MutationKind kind, const Address& target) {
  const Nat spurious = t.order().domain_bound() + 1;
  auto base = std::make_shared<DerivationTree>(t);
  auto lookup = [base, kind, target, spurious](const Address& a) -> std::optional<NodeData> {
    auto node = base->node(a);
    if (!node || !(a == target)) return node;
    NodeData d = *node;
    switch (kind) {
      case MutationKind::RaiseOrdinal: {
        if (!target.is_root() && target.depth() > 1) {
          std::vector<Nat> up = target.path();
          up.pop_back();
          if (auto parent = base->node(Address(std::move(up)))) {
            d.ord = parent->ord;
            break;
          }
        }
        d.ord = natural_sum(d.ord, Ordinal::one());
        break;
      }
      case MutationKind::DropNum:
        if (d.num) d.seq = d.seq.without(*d.num);
        break;
      case MutationKind::ChangeSequent:
        d.seq = d.seq.with(spurious);
        break;
      case MutationKind::BreakRoot:
        d.ord = natural_sum(d.ord, Ordinal::one());
        break;
      case MutationKind::BadRule:
        d.rul = RuleTag::Cut;
        break;
    }
    return d;
  };
  return DerivationTree(t.order(), t.alpha0(), std::move(lookup));
}

}  // namespace ordembed
