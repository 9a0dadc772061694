// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordembed/common.hpp"
#include "ordembed/errors.hpp"

namespace ordembed {

/// An ordinal below epsilon_0 in Cantor normal form: a finite sum
/// w^e1*c1 + ... + w^ek*ck with exponents e1 > ... > ek (themselves ordinals
/// of the same kind) and integer coefficients ci >= 1. The empty sum is 0.
///
/// Values are canonical by construction, so structural equality coincides
/// with ordinal equality. Ordinals are immutable after construction and safe
/// to share across threads.
class Ordinal {
 public:
  using Coeff = boost::multiprecision::cpp_int;
  struct Term;
  using TermList = std::vector<Term>;

  /// Zero.
  Ordinal();
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal zero();
  static Ordinal one();
  static Ordinal omega();
  static Ordinal from_natural(const Coeff& n);
  static Ordinal from_natural(Nat n);

  /// Builds an ordinal from arbitrary (exponent, coefficient) pairs:
  /// sorts exponents into strictly decreasing order and merges duplicates.
  /// Throws std::invalid_argument on a coefficient < 1.
  static Ordinal from_terms(TermList terms);

  /// Parses the textual notation (grammar in the project README); extra
  /// whitespace between tokens is tolerated. Non-canonical input such as
  /// "w + w" is normalized. Throws ParseError on malformed text.
  static Ordinal parse(std::string_view text);

  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff the value is a natural number (zero or a single w^0 term).
  bool is_natural() const;
  /// The value as a natural number; requires is_natural().
  Coeff natural_value() const;

  /// Canonical rendering; parse(to_string()) reproduces the value exactly.
  std::string to_string() const;

 private:
  struct AlreadyCanonical {};
  Ordinal(TermList terms, AlreadyCanonical);

  TermList terms_;

  friend Ordinal natural_sum(const Ordinal&, const Ordinal&);
  friend Ordinal omega_power(const Ordinal&);
};

struct Ordinal::Term {
  Ordinal exponent;
  Coeff coefficient;
};

/// Standard epsilon_0 order on canonical forms: lexicographic over the term
/// sequences, exponents compared recursively, a proper prefix comparing less.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Hessenberg (natural) sum: merges the term sequences, adding coefficients
/// of equal exponents. Associative, commutative, strictly monotone in both
/// arguments.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

/// w^exponent.
Ordinal omega_power(const Ordinal& exponent);

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}
inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace ordembed
