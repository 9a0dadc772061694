// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ordembed/errors.hpp"
#include "ordembed/ordinal.hpp"

using ordembed::compare;
using ordembed::natural_sum;
using ordembed::omega_power;
using ordembed::Ordinal;
using ordembed::ParseError;

namespace {

Ordinal ord(const std::string& text) { return Ordinal::parse(text); }

// Random CNF value with exponent nesting below `depth`, coefficients <= 9.
Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    return Ordinal::from_natural(static_cast<ordembed::Nat>(rng() % 10));
  }
  Ordinal::TermList terms;
  const auto count = rng() % 3 + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    terms.push_back(Ordinal::Term{random_ordinal(rng, depth - 1),
                                  Ordinal::Coeff(rng() % 9 + 1)});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("constants and naturals") {
  CHECK(Ordinal::zero().is_zero());
  CHECK(Ordinal::zero().to_string() == "0");
  CHECK(Ordinal::one().to_string() == "1");
  CHECK(Ordinal::omega().to_string() == "w");
  CHECK(Ordinal::from_natural(ordembed::Nat{7}).to_string() == "7");
  CHECK(Ordinal::from_natural(Ordinal::Coeff(0)) == Ordinal::zero());
  CHECK(Ordinal::from_natural(ordembed::Nat{3}).is_natural());
  CHECK(Ordinal::from_natural(ordembed::Nat{3}).natural_value() == 3);
  CHECK(!Ordinal::omega().is_natural());
  CHECK(Ordinal::zero().is_natural());
  CHECK(Ordinal::zero().natural_value() == 0);
  CHECK_THROWS_AS(Ordinal::from_natural(Ordinal::Coeff(-1)), std::invalid_argument);
}

TEST_CASE("parsing canonical and non-canonical text") {
  Ordinal a = ord("w^2*3 + 5");
  REQUIRE(a.terms().size() == 2);
  CHECK(a.terms()[0].exponent == Ordinal::from_natural(ordembed::Nat{2}));
  CHECK(a.terms()[0].coefficient == 3);
  CHECK(a.terms()[1].exponent.is_zero());
  CHECK(a.terms()[1].coefficient == 5);

  CHECK(ord("w + w").to_string() == "w*2");
  CHECK(ord("3 + w").to_string() == "w + 3");
  CHECK(ord("w*1").to_string() == "w");
  CHECK(ord("w^1").to_string() == "w");
  CHECK(ord("w^0").to_string() == "1");
  CHECK(ord("w^(w)").to_string() == "w^w");
  CHECK(ord("w^(2)").to_string() == "w^2");
  CHECK(ord("w^(w + 1)*4 + w^w*2 + w^2 + 9").to_string() ==
        "w^(w + 1)*4 + w^w*2 + w^2 + 9");
  CHECK(ord("w^2 * 3  +  5").to_string() == "w^2*3 + 5");
  CHECK(ord("0") == Ordinal::zero());
  CHECK(ord(" 0 ") == Ordinal::zero());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(ord(""), ParseError);
  try {
    ord("");
  } catch (const ParseError& e) {
    CHECK(e.position() == 0);
  }
  CHECK_THROWS_AS(ord("w^"), ParseError);
  CHECK_THROWS_AS(ord("w*"), ParseError);
  CHECK_THROWS_AS(ord("w*0"), ParseError);
  CHECK_THROWS_AS(ord("0*2"), ParseError);
  CHECK_THROWS_AS(ord("w +"), ParseError);
  CHECK_THROWS_AS(ord("+ w"), ParseError);
  CHECK_THROWS_AS(ord("w w"), ParseError);
  CHECK_THROWS_AS(ord("w^()"), ParseError);
  CHECK_THROWS_AS(ord("w^(w"), ParseError);
  CHECK_THROWS_AS(ord("q"), ParseError);
  CHECK_THROWS_AS(ord("w^*2"), ParseError);
  // The caret binds tightly: spaces inside w^ and chained exponents without
  // parentheses are both outside the grammar.
  CHECK_THROWS_AS(ord("w ^ 2"), ParseError);
  CHECK_THROWS_AS(ord("w^w^w"), ParseError);
  try {
    ord("w 5");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("from_terms normalizes order and merges duplicates") {
  Ordinal::TermList terms;
  terms.push_back(Ordinal::Term{Ordinal::zero(), 2});
  terms.push_back(Ordinal::Term{Ordinal::one(), 1});
  terms.push_back(Ordinal::Term{Ordinal::one(), 3});
  CHECK(Ordinal::from_terms(std::move(terms)).to_string() == "w*4 + 2");

  Ordinal::TermList bad;
  bad.push_back(Ordinal::Term{Ordinal::one(), 0});
  CHECK_THROWS_AS(Ordinal::from_terms(std::move(bad)), std::invalid_argument);
  CHECK(Ordinal::from_terms({}) == Ordinal::zero());
}

TEST_CASE("comparison agrees with the epsilon_0 order") {
  std::vector<std::string> ascending = {
      "0",      "1",     "2",         "w",          "w + 1",     "w + 2",
      "w*2",    "w*2 + 1", "w^2",     "w^2 + w",    "w^2*3 + 5", "w^3",
      "w^w",    "w^w + w^2", "w^w*2", "w^(w + 1)",  "w^(w*2)",   "w^(w^2)",
      "w^(w^w)"};
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    for (std::size_t j = 0; j < ascending.size(); ++j) {
      const Ordinal a = ord(ascending[i]);
      const Ordinal b = ord(ascending[j]);
      if (i < j) CHECK(a < b);
      if (i == j) CHECK(a == b);
      if (i > j) CHECK(a > b);
    }
  }
}

TEST_CASE("natural sum on known values") {
  CHECK(natural_sum(Ordinal::omega(), Ordinal::one()).to_string() == "w + 1");
  CHECK(natural_sum(ord("w + 1"), Ordinal::omega()).to_string() == "w*2 + 1");
  CHECK(natural_sum(ord("w^2"), ord("w^2 + w")).to_string() == "w^2*2 + w");
  CHECK(natural_sum(Ordinal::zero(), ord("w^w")) == ord("w^w"));
  CHECK(natural_sum(ord("3"), ord("4")).to_string() == "7");
  CHECK(natural_sum(ord("w^w + w^2*2 + 1"), ord("w^3 + w^2")).to_string() ==
        "w^w + w^3 + w^2*3 + 1");
}

TEST_CASE("omega_power on known values") {
  CHECK(omega_power(Ordinal::zero()) == Ordinal::one());
  CHECK(omega_power(Ordinal::one()) == Ordinal::omega());
  CHECK(omega_power(ord("2")).to_string() == "w^2");
  CHECK(omega_power(Ordinal::omega()).to_string() == "w^w");
  CHECK(omega_power(ord("w + 1")).to_string() == "w^(w + 1)");
  CHECK(omega_power(ord("w^w")).to_string() == "w^(w^w)");
}

TEST_CASE("algebraic laws on random values") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 1000; ++trial) {
    const Ordinal a = random_ordinal(rng, 3);
    const Ordinal b = random_ordinal(rng, 3);
    const Ordinal c = random_ordinal(rng, 3);

    // Trichotomy.
    const int lt = a < b, eq = a == b, gt = a > b;
    CHECK(lt + eq + gt == 1);

    // Transitivity.
    if (a <= b && b <= c) CHECK(a <= c);

    // Natural sum: commutative, associative, strictly monotone.
    CHECK(natural_sum(a, b) == natural_sum(b, a));
    CHECK(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)));
    if (a < b) {
      CHECK(natural_sum(a, c) < natural_sum(b, c));
      CHECK(omega_power(a) < omega_power(b));
    }

    // Printing round-trips.
    CHECK(Ordinal::parse(a.to_string()) == a);
  }
}

TEST_CASE("stream output matches to_string") {
  std::ostringstream out;
  out << ord("w^2 + 4");
  CHECK(out.str() == "w^2 + 4");
}
