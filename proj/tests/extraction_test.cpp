// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <vector>

#include "ordembed/errors.hpp"
#include "ordembed/extraction.hpp"
#include "ordembed/order.hpp"
#include "ordembed/synthesis.hpp"

using namespace ordembed;

namespace {

Address addr(std::vector<Nat> path) { return Address(std::move(path)); }

DerivationTree map_tree(OrderSpec o, Ordinal alpha0,
                        std::map<std::vector<Nat>, NodeData> nodes) {
  auto table = std::make_shared<std::map<std::vector<Nat>, NodeData>>(std::move(nodes));
  return DerivationTree(std::move(o), std::move(alpha0),
                        [table](const Address& a) -> std::optional<NodeData> {
                          auto it = table->find(a.path());
                          if (it == table->end()) return std::nullopt;
                          return it->second;
                        });
}

NodeData node(std::vector<Nat> seq, const char* ord, RuleTag rul,
              std::optional<Nat> num = std::nullopt, Nat crk = 0) {
  return NodeData{Sequent(std::move(seq)), Ordinal::parse(ord), rul, crk, num};
}

// 0 with 1 strictly below it; extract(1) descends from the record of 0.
OrderSpec one_below_zero() { return from_edges({{1, 0}}); }

void expect_fault(Extraction& ex, Nat m, const std::string& at,
                  const std::string& condition) {
  try {
    ex.extract(m);
    CHECK_MESSAGE(false, "expected a fault: ", condition);
  } catch (const TreeShapeError& e) {
    CHECK(e.address() == at);
    CHECK(e.condition() == condition);
  }
}

}  // namespace

TEST_CASE("worked example on the three-chain") {
  Extraction ex(synth_tree(reverse_initial(2)));

  const ExtractionRecord& r0 = ex.extract(0);
  CHECK(r0.case_tag == CaseTag::Case1);
  CHECK(r0.sigma == addr({0}));
  CHECK(r0.beta.to_string() == "3");
  CHECK(r0.gamma == Sequent({0}));
  CHECK(!r0.n0);
  CHECK(!r0.n1);
  CHECK(r0.table_line() == "0\tcase1\t-\t0\t3\t0");

  const ExtractionRecord& r1 = ex.extract(1);
  CHECK(r1.case_tag == CaseTag::Case22);
  CHECK(r1.n0 == 0);
  CHECK(r1.sigma == addr({0, 0}));
  CHECK(r1.beta.to_string() == "2");
  CHECK(r1.gamma == Sequent({0}));
  CHECK(!r1.n1);
  CHECK(r1.table_line() == "1\tcase2.2\t0\t0/0\t2\t0");

  const ExtractionRecord& r2 = ex.extract(2);
  CHECK(r2.case_tag == CaseTag::Case21);
  CHECK(r2.n0 == 1);
  CHECK(r2.n1 == 0);
  CHECK(r2.sigma == addr({0, 0, 2}));
  CHECK(r2.beta.to_string() == "0");
  CHECK(r2.gamma == Sequent({0, 2}));
  CHECK(r2.table_line() == "2\tcase2.1\t1\t0/0/2\t0\t0,2");

  CHECK(ex.eq2_checks() == 3);
  CHECK(ex.coherence_checks() == 3);

  // Memoized records are returned unchanged.
  CHECK(ex.extract(1).table_line() == r1.table_line());
  CHECK(ex.eq2_checks() == 3);
}

TEST_CASE("worked example on the delayed tree") {
  Extraction ex(synth_tree_delayed(reverse_initial(2)));

  const ExtractionRecord& r0 = ex.extract(0);
  CHECK(r0.case_tag == CaseTag::Case1);
  CHECK(r0.beta.to_string() == "4");

  const ExtractionRecord& r1 = ex.extract(1);
  CHECK(r1.case_tag == CaseTag::Case22);
  CHECK(r1.n0 == 0);
  CHECK(r1.sigma == addr({0, 0}));
  CHECK(r1.beta.to_string() == "3");
  CHECK(r1.gamma == Sequent({0}));

  // The extra repetition keeps m = 2 on a repetition edge instead of a
  // progression: its record still descends from 1 but lands at <0,0,0>.
  const ExtractionRecord& r2 = ex.extract(2);
  CHECK(r2.case_tag == CaseTag::Case22);
  CHECK(r2.n0 == 1);
  CHECK(r2.sigma == addr({0, 0, 0}));
  CHECK(r2.beta.to_string() == "2");
  CHECK(r2.gamma == Sequent({0}));
}

TEST_CASE("case 1 applies exactly when nothing below m sits above it") {
  Extraction ex(synth_tree(divisibility_order(30)));
  // Divisibility never relates m above any smaller index, so every record
  // is case 1 with beta = alpha0.
  for (Nat m = 0; m < 30; ++m) {
    const ExtractionRecord& r = ex.extract(m);
    CHECK(r.case_tag == CaseTag::Case1);
    CHECK(r.beta == Ordinal::omega());
    CHECK(r.gamma == Sequent({m}));
  }
}

TEST_CASE("n0 is the least index attaining the minimal beta") {
  // In reverse-initial 3, extract(3) sees beta = (4,3,1,?) below it; the
  // minimum over {0,1,2} is beta_2, so n0 = 2.
  Extraction ex(synth_tree(reverse_initial(3)));
  CHECK(ex.extract(1).beta.to_string() == "3");
  CHECK(ex.extract(2).beta.to_string() == "1");
  const ExtractionRecord& r3 = ex.extract(3);
  CHECK(r3.n0 == 2);
}

TEST_CASE("lemma 1 holds on synthesized trees") {
  Extraction ex(synth_tree(reverse_initial(2)));
  Lemma1Report r = verify_lemma1(ex, 2);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 3);

  Extraction lex(synth_tree(lex_pairs(40)));
  Lemma1Report rl = verify_lemma1(lex, 39);
  CHECK(rl.ok());
  CHECK(rl.pairs_checked > 0);

  Extraction dag(synth_tree(random_dag(25, 11, 0.3)));
  CHECK(verify_lemma1(dag, 24).ok());
}

TEST_CASE("extraction faults name the address and condition") {
  const Ordinal w = Ordinal::omega();

  // Absent root.
  Extraction missing_root(map_tree(one_below_zero(), w, {}));
  expect_fault(missing_root, 0, "0", "root-absent");

  // Progression at sigma_{n0} whose main formula is not above m.
  Extraction not_above(map_tree(one_below_zero(), w,
                                {{{0}, node({0}, "w", RuleTag::Prg, 5)}}));
  expect_fault(not_above, 1, "0", "main-formula-not-above");

  // Progression at sigma_{n0} without a main formula.
  Extraction numless(map_tree(one_below_zero(), w,
                              {{{0}, node({0}, "w", RuleTag::Prg)}}));
  expect_fault(numless, 1, "0", "num-missing");

  // Unsupported rule at sigma_{n0}.
  Extraction misruled(map_tree(one_below_zero(), w,
                               {{{0}, node({0}, "w", RuleTag::Or)}}));
  expect_fault(misruled, 1, "0", "unsupported-rule");

  // Required repetition premise missing.
  Extraction no_child(map_tree(one_below_zero(), w,
                               {{{0}, node({0}, "w", RuleTag::Rep)}}));
  expect_fault(no_child, 1, "0/0", "premise-absent");

  // Premise ordinal fails to shrink.
  Extraction stuck(map_tree(one_below_zero(), w,
                            {{{0}, node({0}, "w", RuleTag::Rep)},
                             {{0, 0}, node({0}, "w", RuleTag::Rep)}}));
  expect_fault(stuck, 1, "0/0", "premise-ordinal-not-smaller");

  // Premise changes the cut rank.
  Extraction ranked(map_tree(one_below_zero(), w,
                             {{{0}, node({0}, "w", RuleTag::Rep)},
                              {{0, 0}, node({0}, "1", RuleTag::Rep, std::nullopt, 1)}}));
  expect_fault(ranked, 1, "0/0", "premise-cut-rank-mismatch");

  // Repetition premise drifts to a different sequent.
  Extraction drifted(map_tree(one_below_zero(), w,
                              {{{0}, node({0}, "w", RuleTag::Rep)},
                               {{0, 0}, node({0, 1}, "1", RuleTag::Rep)}}));
  expect_fault(drifted, 1, "0/0", "premise-sequent-mismatch");

  // A root sequent smuggling in a number not above m breaks Eq (2).
  Extraction smuggled(map_tree(one_below_zero(), w,
                               {{{0}, node({0, 1}, "w", RuleTag::Rep)}}));
  try {
    smuggled.extract(0);
    CHECK(false);
  } catch (const TreeShapeError& e) {
    CHECK(e.address() == "0");
    CHECK(e.condition() == "gamma-member-not-above");
    CHECK(e.witness() == Nat{1});
  }
}

TEST_CASE("unstable lookups are caught by the coherence recheck") {
  // The node at <0> changes between the record read and the recheck; the
  // extraction must refuse to hand out the stale record.
  auto calls = std::make_shared<int>(0);
  DerivationTree shifty(
      one_below_zero(), Ordinal::omega(),
      [calls](const Address& a) -> std::optional<NodeData> {
        if (a.path() != std::vector<Nat>{0}) return std::nullopt;
        ++*calls;
        return NodeData{Sequent({0}),
                        *calls == 1 ? Ordinal::omega() : Ordinal::one(),
                        RuleTag::Rep, 0, std::nullopt};
      });
  Extraction ex(shifty);
  try {
    ex.extract(0);
    CHECK(false);
  } catch (const TreeShapeError& e) {
    CHECK(e.address() == "0");
    CHECK(e.condition() == "record-node-mismatch");
  }
}

TEST_CASE("a vanished prior node is caught when m descends from it") {
  // <0> answers its case-1 read and recheck, then disappears before the
  // descent for m = 1 consults it again.
  auto calls = std::make_shared<int>(0);
  DerivationTree fading(
      one_below_zero(), Ordinal::omega(),
      [calls](const Address& a) -> std::optional<NodeData> {
        if (a.path() != std::vector<Nat>{0}) return std::nullopt;
        if (++*calls > 2) return std::nullopt;
        return NodeData{Sequent({0}), Ordinal::omega(), RuleTag::Rep, 0, std::nullopt};
      });
  Extraction ex(fading);
  ex.extract(0);
  expect_fault(ex, 1, "0", "node-absent");
}
