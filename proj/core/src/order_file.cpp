// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "bit_matrix.hpp"
#include "ordembed/order.hpp"

namespace ordembed {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const char* ws = " \t\r";
  auto first = line.find_first_not_of(ws);
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(ws);
  return line.substr(first, last - first + 1);
}

Nat parse_vertex(const std::string& token, std::size_t lineno) {
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected a natural number, got '" + token + "'", lineno);
  }
  return value;
}

// Longest chain strictly below each vertex of a transitively closed DAG,
// via one pass over vertices in topological order.
std::vector<Nat> longest_chain_below(const detail::BitMatrix& mat, Nat bound) {
  std::vector<Nat> preds_left(bound, 0);
  for (Nat x = 0; x < bound; ++x) {
    mat.for_each_set(x, [&](std::size_t n) { ++preds_left[n]; });
  }
  std::priority_queue<Nat, std::vector<Nat>, std::greater<>> ready;
  for (Nat n = 0; n < bound; ++n) {
    if (preds_left[n] == 0) ready.push(n);
  }
  std::vector<Nat> chain(bound, 0);
  while (!ready.empty()) {
    Nat x = ready.top();
    ready.pop();
    mat.for_each_set(x, [&](std::size_t n) {
      chain[n] = std::max(chain[n], chain[x] + 1);
      if (--preds_left[n] == 0) ready.push(Nat(n));
    });
  }
  return chain;
}

}  // namespace

OrderSpec load_order_file(const std::string& path, bool derive_ranks) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open order file: " + path);

  std::vector<std::pair<Nat, Nat>> edges;
  auto ranks = std::make_shared<std::map<Nat, Ordinal>>();
  std::optional<Ordinal> rank_bound;
  bool header_seen = false;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (!header_seen) {
      if (line != "order") throw ParseError("expected 'order' header line", lineno);
      header_seen = true;
      continue;
    }

    std::istringstream tokens(line);
    std::string directive;
    tokens >> directive;

    if (directive == "edge") {
      std::string a, b, extra;
      tokens >> a >> b;
      if (a.empty() || b.empty() || (tokens >> extra)) {
        throw ParseError("expected 'edge A B'", lineno);
      }
      edges.emplace_back(parse_vertex(a, lineno), parse_vertex(b, lineno));
    } else if (directive == "rank") {
      std::string n;
      tokens >> n;
      std::string ord_text;
      std::getline(tokens, ord_text);
      ord_text = strip(ord_text);
      if (n.empty() || ord_text.empty()) throw ParseError("expected 'rank N ORD'", lineno);
      try {
        (*ranks)[parse_vertex(n, lineno)] = Ordinal::parse(ord_text);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad rank ordinal: ") + e.what(), lineno);
      }
    } else if (directive == "rankbound") {
      std::string ord_text;
      std::getline(tokens, ord_text);
      ord_text = strip(ord_text);
      if (ord_text.empty()) throw ParseError("expected 'rankbound ORD'", lineno);
      try {
        rank_bound = Ordinal::parse(ord_text);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad rankbound ordinal: ") + e.what(), lineno);
      }
    } else {
      throw ParseError("unknown directive '" + directive + "'", lineno);
    }
  }
  if (!header_seen) throw ParseError("missing 'order' header", 1);

  // Rank lines may name vertices no edge touches; they still belong to the
  // domain.
  Nat bound = 0;
  for (const auto& [a, b] : edges) bound = std::max({bound, a + 1, b + 1});
  for (const auto& [n, r] : *ranks) bound = std::max(bound, n + 1);

  OrderSpec base = from_edges(edges);
  std::string name = "file:" + path;
  auto relates = [base](Nat m, Nat n) { return base.relates(m, n); };

  if (derive_ranks) {
    if (!ranks->empty()) {
      throw UsageError("order file already provides ranks; rank derivation not applicable");
    }
    detail::BitMatrix closed(static_cast<std::size_t>(bound));
    for (Nat i = 0; i < bound; ++i) {
      for (Nat j = 0; j < bound; ++j) {
        if (base.relates(i, j)) closed.set(i, j);
      }
    }
    auto chain = std::make_shared<std::vector<Nat>>(longest_chain_below(closed, bound));
    Ordinal derived_bound = rank_bound ? *rank_bound : Ordinal::from_natural(bound + 1);
    return OrderSpec(
        name, bound, relates,
        [chain](Nat n) { return Ordinal::from_natural((*chain)[n]); }, derived_bound);
  }

  if (!ranks->empty()) {
    auto rank = [ranks](Nat n) {
      auto it = ranks->find(n);
      return it == ranks->end() ? Ordinal::zero() : it->second;
    };
    return OrderSpec(name, bound, relates, rank, rank_bound);
  }

  return OrderSpec(name, bound, relates, OrderSpec::RankFn{}, rank_bound);
}

}  // namespace ordembed
