// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ordembed/embedding.hpp"
#include "ordembed/errors.hpp"
#include "ordembed/order.hpp"
#include "ordembed/synthesis.hpp"

using namespace ordembed;

namespace {

Extraction synth_extraction(const OrderSpec& o) { return Extraction(synth_tree(o)); }

// Two mutually-below vertices make the restriction under 2 cyclic while the
// extraction itself stays consistent (2 relates to nothing).
DerivationTree cyclic_pocket() {
  OrderSpec o("cyclic-pocket", 3, [](Nat m, Nat n) {
    return (m == 0 && n == 1) || (m == 1 && n == 0);
  });
  auto table = std::make_shared<std::map<std::vector<Nat>, NodeData>>();
  (*table)[{0}] = NodeData{Sequent({0}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  (*table)[{0, 0}] = NodeData{Sequent({0}), Ordinal::parse("5"), RuleTag::Rep, 0, std::nullopt};
  (*table)[{1}] = NodeData{Sequent({1}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  (*table)[{2}] = NodeData{Sequent({2}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  return DerivationTree(std::move(o), Ordinal::omega(),
                        [table](const Address& a) -> std::optional<NodeData> {
                          auto it = table->find(a.path());
                          if (it == table->end()) return std::nullopt;
                          return it->second;
                        });
}

}  // namespace

TEST_CASE("worked example embedding") {
  Extraction ex = synth_extraction(reverse_initial(2));
  EmbeddingTable tab = f_dp(ex, 2);

  CHECK(tab.n_max == 2);
  CHECK(tab.alpha0.to_string() == "3");
  CHECK(tab.alpha1.to_string() == "w^4");
  CHECK(tab.beta[0].to_string() == "3");
  CHECK(tab.beta[1].to_string() == "2");
  CHECK(tab.beta[2].to_string() == "0");
  for (Nat n = 0; n <= 2; ++n) CHECK(tab.gamma[n] == Ordinal::zero());
  CHECK(tab.f[0].to_string() == "w^3");
  CHECK(tab.f[1].to_string() == "w^2");
  CHECK(tab.f[2].to_string() == "1");
  CHECK(tab.table_line(0) == "0\t3\t0\tw^3");
  CHECK(tab.table_line(2) == "2\t0\t0\t1");

  Extraction delayed(synth_tree_delayed(reverse_initial(2)));
  EmbeddingTable dtab = f_dp(delayed, 2);
  CHECK(dtab.alpha1.to_string() == "w^5");
  CHECK(dtab.f[0].to_string() == "w^4");
  CHECK(dtab.f[1].to_string() == "w^3");
  CHECK(dtab.f[2].to_string() == "w^2");
}

TEST_CASE("chain sums accumulate through shared predecessors") {
  // Under divisibility every beta is w, so f counts the longest chain:
  // index 5 is the number 6 with chain 1 | 2 | 6 giving f = w^w * 3.
  Extraction ex = synth_extraction(divisibility_order(13));
  EmbeddingTable tab = f_dp(ex, 12);
  CHECK(tab.f[0].to_string() == "w^w");
  CHECK(tab.f[1].to_string() == "w^w*2");
  CHECK(tab.f[5].to_string() == "w^w*3");
  CHECK(tab.f[11].to_string() == "w^w*4");  // 12 = 1 | 2 | 4 | 12 (or 1|2|6|12)
  for (Nat n = 0; n <= 12; ++n) {
    CHECK(tab.f[n] == natural_sum(omega_power(tab.beta[n]), tab.gamma[n]));
  }
}

TEST_CASE("dynamic program agrees with the brute-force oracle") {
  for (const OrderSpec& o :
       {reverse_initial(8), divisibility_order(12), lex_pairs(12), finite_subsets(3),
        random_dag(12, 1, 0.5), random_dag(12, 2, 0.5), random_dag(12, 3, 0.2)}) {
    Extraction ex = synth_extraction(o);
    const Nat n_max = o.domain_bound() > 12 ? 11 : o.domain_bound() - 1;
    EmbeddingTable tab = f_dp(ex, n_max);
    for (Nat n = 0; n <= n_max; ++n) {
      CHECK(f_bruteforce(ex, n) == tab.f[n]);
    }
  }
}

TEST_CASE("brute force refuses work beyond its limit") {
  Extraction ex = synth_extraction(reverse_initial(20));
  CHECK_THROWS_AS(f_bruteforce(ex, 13, 12), UsageError);
  CHECK_NOTHROW(f_bruteforce(ex, 3, 12));
  CHECK_THROWS_AS(f_bruteforce(ex, 1, 0), UsageError);
}

TEST_CASE("alpha1 ceiling") {
  CHECK(alpha1_bound(Ordinal::omega()).to_string() == "w^(w + 1)");
  CHECK(alpha1_bound(Ordinal::parse("3")).to_string() == "w^4");
  CHECK(alpha1_bound(Ordinal::zero()).to_string() == "w");
}

TEST_CASE("lt_prime is the lexicographic order on (f, n)") {
  Extraction ex = synth_extraction(reverse_initial(2));
  EmbeddingTable tab = f_dp(ex, 2);

  CHECK(lt_prime(tab, 2, 1));
  CHECK(lt_prime(tab, 1, 0));
  CHECK(lt_prime(tab, 2, 0));
  CHECK(!lt_prime(tab, 0, 2));
  CHECK(!lt_prime(tab, 1, 1));
  CHECK_THROWS_AS(lt_prime(tab, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(lex_precedes(tab, 3, 0), std::out_of_range);

  for (Nat n = 0; n <= 2; ++n) {
    for (Nat m = 0; m <= 2; ++m) {
      CHECK(lt_prime(tab, n, m) == lex_precedes(tab, n, m));
    }
  }

  // Equal f values break the tie by index: divisibility indices 1 and 2
  // (numbers 2 and 3) have identical chains, hence identical f.
  Extraction div = synth_extraction(divisibility_order(6));
  EmbeddingTable dtab = f_dp(div, 5);
  REQUIRE(dtab.f[1] == dtab.f[2]);
  CHECK(lt_prime(dtab, 1, 2));
  CHECK(!lt_prime(dtab, 2, 1));
  CHECK(lex_precedes(dtab, 1, 2));
}

TEST_CASE("sorting by lt_prime linearizes the worked example") {
  Extraction ex = synth_extraction(reverse_initial(2));
  EmbeddingTable tab = f_dp(ex, 2);
  CHECK(sorted_by_lt_prime(tab) == std::vector<Nat>{2, 1, 0});
}

TEST_CASE("theorem sweep on the worked example") {
  Extraction ex = synth_extraction(reverse_initial(2));
  EmbeddingTable tab = f_dp(ex, 2);
  TheoremReport r = verify_theorem(tab, ex.order(), 2);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 3);
  CHECK(r.bounds_checked == 3);
  // f(0) = w^3 exactly meets w^alpha0, so the strong bound is not held.
  CHECK(!r.strong_bound_held);

  // Element 0 never has a prior number, so its record reads the root and
  // beta(0) = alpha0; f(0) = w^alpha0 meets the strong bound in every
  // order, which is exactly why the ceiling rounds up to alpha0 + 1.
  Extraction lex = synth_extraction(lex_pairs(10));
  EmbeddingTable ltab = f_dp(lex, 9);
  TheoremReport lr = verify_theorem(ltab, lex.order(), 9);
  CHECK(lr.ok());
  CHECK(!lr.strong_bound_held);
}

TEST_CASE("extension sweep certifies the linear order") {
  Extraction ex = synth_extraction(reverse_initial(2));
  EmbeddingTable tab = f_dp(ex, 2);
  ExtensionReport r = verify_extension(tab, ex.order(), 2);
  CHECK(r.ok());
  CHECK(r.checks == 24);

  Extraction dag = synth_extraction(random_dag(18, 5, 0.3));
  EmbeddingTable dtab = f_dp(dag, 17);
  CHECK(verify_extension(dtab, dag.order(), 17).ok());
}

TEST_CASE("cyclic restrictions are refused") {
  Extraction ex(cyclic_pocket());
  EmbeddingTable ok = f_dp(ex, 1);  // no cycle among {0} alone
  CHECK(ok.f[1] == natural_sum(omega_power(ok.beta[1]), ok.gamma[1]));
  CHECK_THROWS_AS(f_dp(ex, 2), CycleError);
}

TEST_CASE("brute force refuses chains that revisit an element") {
  OrderSpec o("tangle", 3, [](Nat m, Nat n) {
    return (m == 0 && n == 1) || (m == 1 && n == 0) || (m == 0 && n == 2) ||
           (m == 1 && n == 2);
  });
  auto table = std::make_shared<std::map<std::vector<Nat>, NodeData>>();
  (*table)[{0}] = NodeData{Sequent({0}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  (*table)[{0, 0}] = NodeData{Sequent({0}), Ordinal::parse("5"), RuleTag::Rep, 0, std::nullopt};
  (*table)[{1}] = NodeData{Sequent({1}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  (*table)[{2}] = NodeData{Sequent({2}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
  DerivationTree t(o, Ordinal::omega(),
                   [table](const Address& a) -> std::optional<NodeData> {
                     auto it = table->find(a.path());
                     if (it == table->end()) return std::nullopt;
                     return it->second;
                   });
  Extraction ex(t);
  CHECK_THROWS_AS(f_bruteforce(ex, 2), std::logic_error);
}
