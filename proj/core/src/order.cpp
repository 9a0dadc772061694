// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/order.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "bit_matrix.hpp"

namespace ordembed {

namespace {

// Dense snapshots keep validation and closure word-parallel; beyond this the
// matrices stop fitting in memory.
constexpr Nat kDenseLimit = 1u << 14;

std::shared_ptr<detail::BitMatrix> closed_matrix(const std::vector<std::pair<Nat, Nat>>& edges,
                                                 Nat bound) {
  auto mat = std::make_shared<detail::BitMatrix>(static_cast<std::size_t>(bound));
  for (const auto& [a, b] : edges) mat->set(a, b);
  mat->transitive_close();
  for (Nat v = 0; v < bound; ++v) {
    if (mat->test(v, v)) throw CycleError(v);
  }
  return mat;
}

Nat prime_factor_count(Nat v) {
  Nat count = 0;
  for (Nat p = 2; p * p <= v; ++p) {
    while (v % p == 0) {
      v /= p;
      ++count;
    }
  }
  if (v > 1) ++count;
  return count;
}

Nat parse_nat_param(const std::string& text, const std::string& what) {
  Nat value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError("invalid " + what + " '" + text + "': expected a natural number");
  }
  return value;
}

}  // namespace

OrderSpec from_edges(const std::vector<std::pair<Nat, Nat>>& edges) {
  Nat bound = 0;
  for (const auto& [a, b] : edges) bound = std::max({bound, a + 1, b + 1});
  if (bound > kDenseLimit) {
    throw std::invalid_argument("edge vertex too large for the dense representation");
  }
  auto mat = closed_matrix(edges, bound);
  return OrderSpec("edges", bound, [mat](Nat m, Nat n) { return mat->test(m, n); });
}

ValidationReport validate(const OrderSpec& o, Nat n_max) {
  if (n_max >= kDenseLimit) {
    throw std::invalid_argument("n_max too large for dense validation");
  }
  const std::size_t count = static_cast<std::size_t>(n_max) + 1;
  ValidationReport report;

  detail::BitMatrix mat(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (o.relates(i, j)) mat.set(i, j);
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    ++report.checked;
    if (mat.test(i, i)) report.violations.push_back({"irreflexivity", {Nat(i)}});
  }

  // Transitivity: for each related (n, m), everything below m must be below n.
  for (std::size_t n = 0; n < count; ++n) {
    mat.for_each_set(n, [&](std::size_t m) {
      ++report.checked;
      mat.for_each_set(m, [&](std::size_t k) {
        if (!mat.test(n, k)) {
          report.violations.push_back({"transitivity", {Nat(n), Nat(m), Nat(k)}});
        }
      });
    });
  }

  if (o.has_rank()) {
    std::vector<Ordinal> ranks;
    ranks.reserve(count);
    for (std::size_t n = 0; n < count; ++n) ranks.push_back(o.rank(n));

    for (std::size_t m = 0; m < count; ++m) {
      mat.for_each_set(m, [&](std::size_t n) {
        ++report.checked;
        if (compare(ranks[m], ranks[n]) != std::strong_ordering::less) {
          report.violations.push_back({"rank-monotonicity", {Nat(m), Nat(n)}});
        }
      });
    }

    if (o.has_rank_bound()) {
      const Ordinal& bound = o.rank_bound();
      for (std::size_t n = 0; n < count && n < o.domain_bound(); ++n) {
        ++report.checked;
        if (compare(ranks[n], bound) != std::strong_ordering::less) {
          report.violations.push_back({"rank-bound", {Nat(n)}});
        }
      }
    }
  }

  return report;
}

OrderSpec reverse_initial(Nat k) {
  return OrderSpec(
      "reverse-initial", k + 1, [](Nat m, Nat n) { return n < m; },
      [k](Nat n) { return Ordinal::from_natural(k - n); }, Ordinal::from_natural(k + 1));
}

OrderSpec divisibility_order(Nat n) {
  return OrderSpec(
      "divisibility", n,
      [](Nat m, Nat nn) { return m != nn && (nn + 1) % (m + 1) == 0; },
      [](Nat v) { return Ordinal::from_natural(prime_factor_count(v + 1)); }, Ordinal::omega());
}

Nat cantor_encode(Nat a, Nat b) { return (a + b) * (a + b + 1) / 2 + b; }

std::pair<Nat, Nat> cantor_decode(Nat n) {
  Nat t = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while ((t + 1) * (t + 2) / 2 <= n) ++t;
  while (t * (t + 1) / 2 > n) --t;
  Nat b = n - t * (t + 1) / 2;
  return {t - b, b};
}

OrderSpec lex_pairs(Nat n) {
  // The domain wrapper rejects arguments >= n before these lambdas run, so
  // decoding once up front keeps relates constant-time.
  auto pairs = std::make_shared<std::vector<std::pair<Nat, Nat>>>();
  pairs->reserve(n);
  for (Nat v = 0; v < n; ++v) pairs->push_back(cantor_decode(v));
  auto relates = [pairs](Nat m, Nat nn) {
    const auto& [am, bm] = (*pairs)[m];
    const auto& [an, bn] = (*pairs)[nn];
    return am < an || (am == an && bm < bn);
  };
  auto rank = [pairs](Nat v) {
    const auto [a, b] = (*pairs)[v];
    Ordinal::TermList terms;
    if (a > 0) terms.push_back(Ordinal::Term{Ordinal::one(), Ordinal::Coeff(a)});
    if (b > 0) terms.push_back(Ordinal::Term{Ordinal::zero(), Ordinal::Coeff(b)});
    return Ordinal::from_terms(std::move(terms));
  };
  return OrderSpec("lex-pairs", n, relates, rank, omega_power(Ordinal::from_natural(Nat{2})));
}

OrderSpec finite_subsets(Nat width) {
  if (width >= 20) throw UsageError("finite-subsets width must be below 20");
  const Nat bound = Nat{1} << width;
  return OrderSpec(
      "finite-subsets", bound,
      [](Nat m, Nat n) { return m != n && (m & n) == m; },
      [](Nat n) { return Ordinal::from_natural(Nat(std::popcount(n))); }, Ordinal::omega());
}

OrderSpec random_dag(Nat size, Nat seed, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("random-dag probability must lie in [0,1]");
  if (size > kDenseLimit) throw UsageError("random-dag size too large");

  auto mat = std::make_shared<detail::BitMatrix>(static_cast<std::size_t>(size));
  std::mt19937 gen(static_cast<std::uint32_t>(seed));
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 4294967296.0);
  for (Nat i = 0; i < size; ++i) {
    for (Nat j = 0; j < i; ++j) {
      if (gen() < threshold) mat->set(i, j);
    }
  }
  mat->transitive_close();

  // Edges run from larger to smaller index, so predecessors of n sit above n
  // and their chain lengths are already final when n is reached.
  auto chain = std::make_shared<std::vector<Nat>>(size, 0);
  for (Nat n = size; n-- > 0;) {
    Nat best = 0;
    for (Nat x = n + 1; x < size; ++x) {
      if (mat->test(x, n)) best = std::max(best, (*chain)[x] + 1);
    }
    (*chain)[n] = best;
  }

  return OrderSpec(
      "random-dag", size, [mat](Nat m, Nat n) { return mat->test(m, n); },
      [chain](Nat n) { return Ordinal::from_natural((*chain)[n]); },
      Ordinal::from_natural(size + 1));
}

OrderSpec make_builtin(const std::string& name, const std::vector<std::string>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      std::ostringstream msg;
      msg << "builtin '" << name << "' takes " << n << " parameter" << (n == 1 ? "" : "s")
          << ", got " << params.size();
      throw UsageError(msg.str());
    }
  };
  if (name == "reverse-initial") {
    want(1);
    return reverse_initial(parse_nat_param(params[0], "k"));
  }
  if (name == "divisibility") {
    want(1);
    return divisibility_order(parse_nat_param(params[0], "N"));
  }
  if (name == "lex-pairs") {
    want(1);
    return lex_pairs(parse_nat_param(params[0], "N"));
  }
  if (name == "finite-subsets") {
    want(1);
    return finite_subsets(parse_nat_param(params[0], "width"));
  }
  if (name == "random-dag") {
    want(3);
    Nat size = parse_nat_param(params[0], "size");
    Nat seed = parse_nat_param(params[1], "seed");
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(params[2], &used);
      if (used != params[2].size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw UsageError("invalid probability '" + params[2] + "'");
    }
    return random_dag(size, seed, p);
  }
  throw UsageError("unknown builtin order '" + name + "'");
}

}  // namespace ordembed
