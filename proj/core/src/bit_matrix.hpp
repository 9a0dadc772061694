// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ordembed::detail {

/// Dense square bit matrix used for relation snapshots: transitive closure,
/// subset tests and fast iteration over rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : n_(n), words_(words_per_row(n)), bits_(n == 0 ? 0 : n * words_, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }

  bool test(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1;
  }

  /// row[dst] |= row[src]
  void or_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  /// Floyd-Warshall style closure: after this, test(i,j) iff j was reachable
  /// from i by a nonempty path in the original matrix.
  void transitive_close() {
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (test(i, k)) or_row(i, k);
      }
    }
  }

  /// Least column set in row `r` but clear in row `other`, if any.
  std::optional<std::size_t> first_in_row_not_in(std::size_t r, std::size_t other) const {
    const std::uint64_t* a = row(r);
    const std::uint64_t* b = row(other);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t diff = a[w] & ~b[w];
      if (diff) return (w << 6) + static_cast<std::size_t>(std::countr_zero(diff));
    }
    return std::nullopt;
  }

  /// Calls fn(c) for every set column of row r, ascending.
  template <typename Fn>
  void for_each_set(std::size_t r, Fn&& fn) const {
    const std::uint64_t* a = row(r);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = a[w];
      while (bits) {
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

 private:
  static std::size_t words_per_row(std::size_t n) { return n == 0 ? 1 : (n + 63) / 64; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ordembed::detail
