// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace ordembed {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(TermList terms, AlreadyCanonical) : terms_(std::move(terms)) {}

Ordinal Ordinal::zero() { return Ordinal(); }

Ordinal Ordinal::one() { return from_natural(Nat{1}); }

Ordinal Ordinal::omega() { return omega_power(one()); }

Ordinal Ordinal::from_natural(const Coeff& n) {
  if (n < 0) throw std::invalid_argument("ordinal coefficient must be >= 0");
  if (n == 0) return Ordinal();
  TermList terms;
  terms.push_back(Term{Ordinal(), n});
  return Ordinal(std::move(terms), AlreadyCanonical{});
}

Ordinal Ordinal::from_natural(Nat n) { return from_natural(Coeff(n)); }

Ordinal Ordinal::from_terms(TermList terms) {
  for (const Term& t : terms) {
    if (t.coefficient < 1) throw std::invalid_argument("ordinal coefficient must be >= 1");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare(a.exponent, b.exponent) == std::strong_ordering::greater;
  });
  TermList merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() &&
        compare(merged.back().exponent, t.exponent) == std::strong_ordering::equal) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  return Ordinal(std::move(merged), AlreadyCanonical{});
}

bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Ordinal::Coeff Ordinal::natural_value() const {
  if (terms_.empty()) return 0;
  if (!is_natural()) throw std::invalid_argument("ordinal is not a natural number");
  return terms_[0].coefficient;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const std::size_t common = std::min(at.size(), bt.size());
  for (std::size_t i = 0; i < common; ++i) {
    auto c = compare(at[i].exponent, bt[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (at[i].coefficient != bt[i].coefficient) {
      return at[i].coefficient < bt[i].coefficient ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
  }
  if (at.size() != bt.size()) {
    return at.size() < bt.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  Ordinal::TermList out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    auto c = compare(i->exponent, j->exponent);
    if (c == std::strong_ordering::greater) {
      out.push_back(*i++);
    } else if (c == std::strong_ordering::less) {
      out.push_back(*j++);
    } else {
      out.push_back(Ordinal::Term{i->exponent, i->coefficient + j->coefficient});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return Ordinal(std::move(out), Ordinal::AlreadyCanonical{});
}

Ordinal omega_power(const Ordinal& exponent) {
  Ordinal::TermList terms;
  terms.push_back(Ordinal::Term{exponent, 1});
  return Ordinal(std::move(terms), Ordinal::AlreadyCanonical{});
}

namespace {

// Recursive-descent parser for the notation grammar:
//   ord    := "0" | term (" + " term)*
//   term   := atom ("*" nat)?
//   atom   := nat | "w" | "w^" factor
//   factor := nat | "w" | "(" ord ")"
// Whitespace between tokens is skipped.
class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : text_(text) {}

  Ordinal parse_whole() {
    Ordinal result = parse_ordinal();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after ordinal");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool eat(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ordinal::Coeff parse_nat() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a decimal number");
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Ordinal::Coeff(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal parse_ordinal() {
    skip_ws();
    if (at_end()) fail("expected an ordinal");
    // "0" is a complete ordinal, not a term.
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t mark = pos_;
      Ordinal::Coeff n = parse_nat();
      if (n == 0) {
        skip_ws();
        if (!at_end() && peek() != ')') fail("'0' cannot appear inside a sum");
        return Ordinal::zero();
      }
      pos_ = mark;
    }
    Ordinal::TermList terms;
    terms.push_back(parse_term());
    while (true) {
      skip_ws();
      std::size_t mark = pos_;
      if (!eat('+')) break;
      skip_ws();
      if (at_end()) {
        pos_ = mark;
        fail("expected a term after '+'");
      }
      terms.push_back(parse_term());
    }
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_ws();
    Ordinal::Term term = parse_atom();
    skip_ws();
    if (eat('*')) {
      skip_ws();
      std::size_t mark = pos_;
      Ordinal::Coeff k = parse_nat();
      if (k == 0) {
        pos_ = mark;
        fail("coefficient must be >= 1");
      }
      term.coefficient *= k;
    }
    return term;
  }

  // An atom is a finite number (a w^0 term) or an omega power.
  Ordinal::Term parse_atom() {
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t mark = pos_;
      Ordinal::Coeff n = parse_nat();
      if (n == 0) {
        pos_ = mark;
        fail("zero term is not allowed here");
      }
      return Ordinal::Term{Ordinal::zero(), n};
    }
    if (eat('w')) {
      if (eat('^')) return Ordinal::Term{parse_factor(), 1};
      return Ordinal::Term{Ordinal::one(), 1};
    }
    fail("expected a number, 'w', or 'w^'");
  }

  Ordinal parse_factor() {
    skip_ws();
    if (at_end()) fail("expected an exponent");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      return Ordinal::from_natural(parse_nat());
    }
    if (eat('w')) return Ordinal::omega();
    if (eat('(')) {
      Ordinal inner = parse_ordinal();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("expected a number, 'w', or '('");
  }
};

void append_term(std::string& out, const Ordinal::Term& term) {
  const Ordinal& e = term.exponent;
  if (e.is_zero()) {
    out += term.coefficient.str();
    return;
  }
  if (e.is_natural() && e.natural_value() == 1) {
    out += "w";
  } else if (e.is_natural()) {
    out += "w^";
    out += e.natural_value().str();
  } else if (e == Ordinal::omega()) {
    out += "w^w";
  } else {
    out += "w^(";
    out += e.to_string();
    out += ")";
  }
  if (term.coefficient != 1) {
    out += "*";
    out += term.coefficient.str();
  }
}

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return NotationParser(text).parse_whole(); }

std::string Ordinal::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    append_term(out, terms_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

}  // namespace ordembed
