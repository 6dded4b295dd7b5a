#include <benchmark/benchmark.h>

#include <utility>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"

using namespace scoped;

namespace {

Prog orChain(const Signature& sig, int depth) {
  Prog p = ret(intV(0));
  for (int i = 1; i <= depth; ++i) p = orP(sig, std::move(p), ret(intV(i % 5)));
  return p;
}

Prog onceLadder(const Signature& sig, int rungs) {
  Prog p = orP(sig, ret(intV(1)), ret(intV(2)));
  for (int i = 0; i < rungs; ++i)
    p = onceP(sig, orP(sig, std::move(p), ret(intV(i % 5))));
  return p;
}

void BM_OrChainFunctorial(benchmark::State& state) {
  const Effect& nd = findEffect("nondet");
  const Prog p = orChain(nd.signature, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Value v = handle(nd.algebra, nd.gen, p);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(state.range(0));
}

void BM_OrChainEM(benchmark::State& state) {
  const Effect& nd = findEffect("nondet");
  const Prog p = orChain(nd.signature, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Value v = handleEM(nd.em, nd.gen, p);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(state.range(0));
}

void BM_OrChainIndexed(benchmark::State& state) {
  const Effect& nd = findEffect("nondet");
  const Prog p = fmap(orChain(nd.signature, static_cast<int>(state.range(0))), nd.gen);
  for (auto _ : state) {
    Leveled v = hfold(nd.indexed, 0, p);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(state.range(0));
}

void BM_OnceLadderFunctorial(benchmark::State& state) {
  const Effect& nd = findEffect("nondet");
  const Prog p = onceLadder(nd.signature, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Value v = handle(nd.algebra, nd.gen, p);
    benchmark::DoNotOptimize(v);
  }
}

void BM_OnceLadderEM(benchmark::State& state) {
  const Effect& nd = findEffect("nondet");
  const Prog p = onceLadder(nd.signature, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Value v = handleEM(nd.em, nd.gen, p);
    benchmark::DoNotOptimize(v);
  }
}

void BM_BindChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Prog p = ret(intV(0));
    for (int i = 0; i < n; ++i)
      p = scoped::bind(p, [](const Value& v) { return ret(v); });
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}

void BM_StateTable(benchmark::State& state) {
  const Effect& st = findEffect("state");
  const Signature& sig = st.signature;
  Prog p = getP(sig);
  for (int i = 0; i < state.range(0); ++i)
    p = seqP(putP(sig, i % kStateDomainSize), std::move(p));
  p = localP(sig, 3, std::move(p));
  for (auto _ : state) {
    Value v = handle(st.algebra, st.gen, p);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_OrChainFunctorial)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_OrChainEM)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_OrChainIndexed)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_OnceLadderFunctorial)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_OnceLadderEM)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_BindChain)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_StateTable)->RangeMultiplier(2)->Range(8, 128);
