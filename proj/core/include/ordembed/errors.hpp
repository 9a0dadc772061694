// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ordembed/common.hpp"

namespace ordembed {

/// Malformed ordinal notation or order file text. `position` is a 0-based
/// offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Transitive closure of an edge set relates some vertex to itself.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(Nat vertex)
      : std::runtime_error("cycle through vertex " + std::to_string(vertex)),
        vertex_(vertex) {}

  Nat vertex() const { return vertex_; }

 private:
  Nat vertex_;
};

/// An operation needing an ordinal rank was given an order without one.
class MissingRankError : public std::runtime_error {
 public:
  explicit MissingRankError(const std::string& what) : std::runtime_error(what) {}
};

/// A derivation tree fails a structural requirement at a specific address:
/// a required child is absent, node data contradicts local correctness on a
/// descended edge, or a guaranteed relation does not hold. These indicate an
/// invalid witness tree, not a caller bug.
class TreeShapeError : public std::runtime_error {
 public:
  TreeShapeError(std::string address, std::string condition,
                 std::optional<Nat> witness = std::nullopt)
      : std::runtime_error("invalid derivation tree at " + address + ": " + condition +
                           (witness ? " (witness " + std::to_string(*witness) + ")" : "")),
        address_(std::move(address)),
        condition_(std::move(condition)),
        witness_(witness) {}

  const std::string& address() const { return address_; }
  const std::string& condition() const { return condition_; }
  std::optional<Nat> witness() const { return witness_; }

 private:
  std::string address_;
  std::string condition_;
  std::optional<Nat> witness_;
};

/// Bad user-facing input: unknown builtin, invalid parameter, missing flag.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordembed
