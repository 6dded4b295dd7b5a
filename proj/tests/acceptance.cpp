// Acceptance gate: one line per criterion, exit 0 only if every one passes.
#include <chrono>
#include <cstdio>
#include <string>
#include <utility>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"
#include "scoped/laws.hpp"
#include "scoped/oracles.hpp"

using namespace scoped;

namespace {

int failures = 0;

std::int64_t now() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int criterion, bool ok, std::int64_t millis, const std::string& label) {
  std::printf("criterion %d %s (%lld ms): %s\n", criterion, ok ? "PASS" : "FAIL",
              static_cast<long long>(millis), label.c_str());
  if (!ok) ++failures;
}

void suiteCriterion(int criterion, const std::string& suite, const SuiteConfig& cfg,
                    int minCases, std::int64_t budgetMillis, const std::string& label) {
  const LawReport r = runLawSuite(suite, cfg);
  const bool ok = r.passed() && r.cases >= minCases && r.millis < budgetMillis;
  report(criterion, ok, r.millis,
         label + ", " + std::to_string(r.cases) + " checks, " +
             std::to_string(r.failures.size()) + " violations");
}

void exactOutputs() {
  const std::int64_t t0 = now();
  const Effect& exc = findEffect("exceptions");
  const Prog& catch42 = findDemo(exc, "catch42");
  const Effect& nd = findEffect("nondet");
  const Prog& oncePair = findDemo(nd, "oncePair");

  bool ok = handleE(excE().endo, catch42) == just(intV(43));
  ok = ok && handleE(excEAbort().endo, catch42) == nothing();
  ok = ok && handleE(ndetE().endo, oncePair) == Value::list({intV(1), intV(2)});
  ok = ok && oracleNondetAlgebraicOnce(oncePair) == Value::list({intV(1)});
  const std::int64_t millis = now() - t0;
  report(1, ok && millis < 1000, millis,
         "worked outputs Just 43 / Nothing / [1,2] / algebraic [1]");
}

void deepChain() {
  const std::int64_t t0 = now();
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  constexpr int kDepth = 10000;
  Prog chain = ret(intV(0));
  for (int i = 1; i <= kDepth; ++i) chain = orP(sig, std::move(chain), ret(intV(i % 5)));

  const Value viaFunctorial = handle(nd.algebra, nd.gen, chain);
  const Value viaEM = handleEM(nd.em, nd.gen, chain);
  const Value viaIndexed = hfold(nd.indexed, 0, fmap(chain, nd.gen)).value;
  const std::int64_t millis = now() - t0;

  const bool ok = viaFunctorial.isList() &&
                  viaFunctorial.elements().size() == static_cast<std::size_t>(kDepth) + 1 &&
                  viaFunctorial == viaEM && viaFunctorial == viaIndexed;
  report(7, ok && millis < 2000, millis,
         "10^4-deep Or-chain, three disciplines agree");
}

}  // namespace

int main() {
  exactOutputs();
  suiteCriterion(2, "monad", SuiteConfig{1, 5, 300}, 4500, 5000,
                 "monad laws, 300 programs per signature at depth 5");
  suiteCriterion(3, "oracle-equivalence", SuiteConfig{1, 4, 300}, 2700, 30000,
                 "three disciplines against brute-force oracles");
  suiteCriterion(4, "preservation", SuiteConfig{1, 4, 300}, 8400, 60000,
                 "four translations preserve interpretation on every effect");
  suiteCriterion(5, "fusion", SuiteConfig{1, 4, 300}, 1600, 5000,
                 "post-processing fuses into the base algebra");
  suiteCriterion(6, "hybrid-fold", SuiteConfig{1, 4, 300}, 2100, 30000,
                 "level-0 hybrid fold equals direct handling");
  deepChain();
  suiteCriterion(8, "naturality", SuiteConfig{1, 4, 300}, 6300, 10000,
                 "functor laws and fold naturality for every carrier");
  return failures == 0 ? 0 : 1;
}
