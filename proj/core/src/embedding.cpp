// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include "ordembed/embedding.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

#include "bit_matrix.hpp"

namespace ordembed {

std::string EmbeddingTable::table_line(Nat n) const {
  std::ostringstream out;
  out << n << '\t' << beta[n].to_string() << '\t' << gamma[n].to_string() << '\t'
      << f[n].to_string();
  return out.str();
}

EmbeddingTable f_dp(Extraction& ex, Nat n_max) {
  const OrderSpec& o = ex.order();
  const std::size_t count = static_cast<std::size_t>(n_max) + 1;

  EmbeddingTable tab;
  tab.n_max = n_max;
  tab.alpha0 = ex.tree().alpha0();
  tab.alpha1 = alpha1_bound(tab.alpha0);
  tab.beta.reserve(count);
  for (Nat m = 0; m <= n_max; ++m) tab.beta.push_back(ex.extract(m).beta);

  detail::BitMatrix pred(count);
  detail::BitMatrix succ(count);
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      if (o.relates(j, k)) {
        pred.set(k, j);
        succ.set(j, k);
      }
    }
  }

  tab.gamma.resize(count);
  tab.f.resize(count);
  std::vector<Ordinal> g(count);
  std::vector<Nat> preds_left(count);

  for (std::size_t n = 0; n < count; ++n) {
    // Kahn sweep of the restriction to {0..n-1}, least ready index first.
    for (std::size_t k = 0; k < n; ++k) {
      Nat left = 0;
      pred.for_each_set(k, [&](std::size_t j) {
        if (j < n) ++left;
      });
      preds_left[k] = left;
    }
    std::priority_queue<Nat, std::vector<Nat>, std::greater<>> ready;
    for (std::size_t k = 0; k < n; ++k) {
      if (preds_left[k] == 0) ready.push(Nat(k));
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
      const Nat k = ready.top();
      ready.pop();
      ++processed;
      Ordinal best;
      pred.for_each_set(k, [&](std::size_t j) {
        if (j < n && compare(g[j], best) == std::strong_ordering::greater) best = g[j];
      });
      g[k] = natural_sum(omega_power(tab.beta[k]), best);
      succ.for_each_set(k, [&](std::size_t s) {
        if (s < n && --preds_left[s] == 0) ready.push(Nat(s));
      });
    }
    if (processed != n) throw CycleError(0);

    Ordinal best;
    pred.for_each_set(n, [&](std::size_t j) {
      if (j < n && compare(g[j], best) == std::strong_ordering::greater) best = g[j];
    });
    tab.gamma[n] = std::move(best);
    tab.f[n] = natural_sum(omega_power(tab.beta[n]), tab.gamma[n]);
  }
  return tab;
}

namespace {

void bruteforce_walk(const OrderSpec& o, const std::vector<Ordinal>& omega_beta, Nat bottom,
                     Nat n, std::vector<bool>& in_chain, const Ordinal& sum, Ordinal& best) {
  if (compare(sum, best) == std::strong_ordering::greater) best = sum;
  for (Nat j = 0; j < n; ++j) {
    if (!o.relates(j, bottom)) continue;
    if (in_chain[j]) {
      throw std::logic_error("chain revisits element " + std::to_string(j) +
                             "; the order is not a strict partial order");
    }
    in_chain[j] = true;
    bruteforce_walk(o, omega_beta, j, n, in_chain, natural_sum(sum, omega_beta[j]), best);
    in_chain[j] = false;
  }
}

}  // namespace

Ordinal f_bruteforce(Extraction& ex, Nat n, Nat limit) {
  if (n > limit) {
    throw UsageError("f_bruteforce called for " + std::to_string(n) +
                     " beyond the brute-force limit " + std::to_string(limit));
  }
  const OrderSpec& o = ex.order();
  std::vector<Ordinal> omega_beta;
  omega_beta.reserve(static_cast<std::size_t>(n) + 1);
  for (Nat m = 0; m <= n; ++m) omega_beta.push_back(omega_power(ex.extract(m).beta));

  std::vector<bool> in_chain(static_cast<std::size_t>(n) + 1, false);
  in_chain[n] = true;
  Ordinal best = omega_beta[n];
  bruteforce_walk(o, omega_beta, n, n, in_chain, omega_beta[n], best);
  return best;
}

Ordinal alpha1_bound(const Ordinal& alpha0) {
  return omega_power(natural_sum(alpha0, Ordinal::one()));
}

namespace {

void require_in_range(const EmbeddingTable& tab, Nat n) {
  if (n > tab.n_max) {
    throw std::out_of_range("index " + std::to_string(n) + " beyond table bound " +
                            std::to_string(tab.n_max));
  }
}

}  // namespace

bool lt_prime(const EmbeddingTable& tab, Nat n, Nat m) {
  require_in_range(tab, n);
  require_in_range(tab, m);
  const auto c = compare(tab.f[n], tab.f[m]);
  return c == std::strong_ordering::less || (c == std::strong_ordering::equal && n < m);
}

bool lex_precedes(const EmbeddingTable& tab, Nat n, Nat m) {
  require_in_range(tab, n);
  require_in_range(tab, m);
  if (!(tab.f[n] == tab.f[m])) return tab.f[n] < tab.f[m];
  return n < m;
}

TheoremReport verify_theorem(const EmbeddingTable& tab, const OrderSpec& o, Nat n_max) {
  TheoremReport report;
  const Ordinal strong = omega_power(tab.alpha0);
  for (Nat m = 0; m <= n_max; ++m) {
    ++report.bounds_checked;
    if (compare(tab.f[m], tab.alpha1) != std::strong_ordering::less) {
      report.violations.push_back({"f-exceeds-alpha1", m, m});
    }
    if (compare(tab.f[m], strong) != std::strong_ordering::less) report.strong_bound_held = false;
    for (Nat n = 0; n <= n_max; ++n) {
      if (!o.relates(n, m)) continue;
      ++report.pairs_checked;
      if (compare(tab.f[n], tab.f[m]) != std::strong_ordering::less) {
        report.violations.push_back({"f-not-monotone", n, m});
      }
    }
  }
  return report;
}

ExtensionReport verify_extension(const EmbeddingTable& tab, const OrderSpec& o, Nat n_max) {
  ExtensionReport report;

  for (Nat n = 0; n <= n_max; ++n) {
    ++report.checks;
    if (lt_prime(tab, n, n)) report.violations.push_back({"irreflexivity", {n}});
  }

  for (Nat n = 0; n <= n_max; ++n) {
    for (Nat m = n + 1; m <= n_max; ++m) {
      ++report.checks;
      const bool nm = lt_prime(tab, n, m);
      const bool mn = lt_prime(tab, m, n);
      if (nm == mn) report.violations.push_back({"totality", {n, m}});
    }
  }

  for (Nat a = 0; a <= n_max; ++a) {
    for (Nat b = 0; b <= n_max; ++b) {
      if (b == a || !lt_prime(tab, a, b)) continue;
      for (Nat c = 0; c <= n_max; ++c) {
        ++report.checks;
        if (lt_prime(tab, b, c) && !lt_prime(tab, a, c)) {
          report.violations.push_back({"transitivity", {a, b, c}});
        }
      }
    }
  }

  for (Nat n = 0; n <= n_max; ++n) {
    for (Nat m = 0; m <= n_max; ++m) {
      if (!o.relates(n, m)) continue;
      ++report.checks;
      if (!lt_prime(tab, n, m)) report.violations.push_back({"extension", {n, m}});
    }
  }

  for (Nat n = 0; n <= n_max; ++n) {
    for (Nat m = 0; m <= n_max; ++m) {
      if (n == m) continue;
      ++report.checks;
      if (lt_prime(tab, n, m) != lex_precedes(tab, n, m)) {
        report.violations.push_back({"lex-agreement", {n, m}});
      }
    }
  }

  return report;
}

std::vector<Nat> sorted_by_lt_prime(const EmbeddingTable& tab) {
  std::vector<Nat> order(static_cast<std::size_t>(tab.n_max) + 1);
  for (Nat n = 0; n <= tab.n_max; ++n) order[n] = n;
  std::sort(order.begin(), order.end(), [&](Nat a, Nat b) { return lt_prime(tab, a, b); });
  return order;
}

}  // namespace ordembed
