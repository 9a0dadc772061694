// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ordembed/derivation.hpp"
#include "ordembed/embedding.hpp"
#include "ordembed/extraction.hpp"
#include "ordembed/order.hpp"
#include "ordembed/ordinal.hpp"
#include "ordembed/synthesis.hpp"

namespace {

using ordembed::Extraction;
using ordembed::Nat;
using ordembed::Ordinal;
using ordembed::OrderSpec;

Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    return Ordinal::from_natural(static_cast<Nat>(rng() % 10));
  }
  Ordinal::TermList terms;
  const auto count = rng() % 3 + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    terms.push_back(
        Ordinal::Term{random_ordinal(rng, depth - 1), Ordinal::Coeff(rng() % 9 + 1)});
  }
  return Ordinal::from_terms(std::move(terms));
}

std::vector<Ordinal> sample_ordinals() {
  std::mt19937_64 rng(7);
  std::vector<Ordinal> values;
  values.reserve(64);
  for (int i = 0; i < 64; ++i) values.push_back(random_ordinal(rng, 3));
  return values;
}

void BM_OrdinalCompare(benchmark::State& state) {
  const auto values = sample_ordinals();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(values[i % 64], values[(i * 31 + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_OrdinalCompare);

void BM_OrdinalNaturalSum(benchmark::State& state) {
  const auto values = sample_ordinals();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(natural_sum(values[i % 64], values[(i * 31 + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_OrdinalNaturalSum);

void BM_OrdinalParse(benchmark::State& state) {
  const std::string text = "w^(w + 1)*4 + w^w*2 + w^2 + 9";
  for (auto _ : state) {
    benchmark::DoNotOptimize(Ordinal::parse(text));
  }
}
BENCHMARK(BM_OrdinalParse);

// One budgeted checker sweep over the synthesized tree of reverse-initial k,
// all roots, full premise fan-out.
void BM_SynthCheckSweep(benchmark::State& state) {
  const Nat k = static_cast<Nat>(state.range(0));
  const OrderSpec o = ordembed::reverse_initial(k);
  std::vector<Nat> roots(o.domain_bound());
  std::iota(roots.begin(), roots.end(), Nat{0});
  for (auto _ : state) {
    const auto tree = ordembed::synth_tree(o);
    benchmark::DoNotOptimize(ordembed::check_truncated(tree, roots, 20, o.domain_bound(), 2000));
  }
}
BENCHMARK(BM_SynthCheckSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

// Full-domain extraction over the divisibility order, fresh memo per run.
void BM_ExtractionSweep(benchmark::State& state) {
  const Nat n = static_cast<Nat>(state.range(0));
  const OrderSpec o = ordembed::divisibility_order(n);
  for (auto _ : state) {
    Extraction ex(ordembed::synth_tree(o));
    for (Nat m = 0; m < o.domain_bound(); ++m) benchmark::DoNotOptimize(ex.extract(m));
  }
}
BENCHMARK(BM_ExtractionSweep)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

// Full-domain embedding over a transitively closed random dag.
void BM_EmbedDp(benchmark::State& state) {
  const Nat size = static_cast<Nat>(state.range(0));
  const OrderSpec o = ordembed::random_dag(size, 1, 0.3);
  for (auto _ : state) {
    Extraction ex(ordembed::synth_tree(o));
    benchmark::DoNotOptimize(ordembed::f_dp(ex, o.domain_bound() - 1));
  }
}
BENCHMARK(BM_EmbedDp)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

// The cubic linear-extension certification over the total lex order.
void BM_VerifyExtension(benchmark::State& state) {
  const Nat n = static_cast<Nat>(state.range(0));
  const OrderSpec o = ordembed::lex_pairs(n);
  Extraction ex(ordembed::synth_tree(o));
  const auto table = ordembed::f_dp(ex, o.domain_bound() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ordembed::verify_extension(table, o, o.domain_bound() - 1));
  }
}
BENCHMARK(BM_VerifyExtension)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
