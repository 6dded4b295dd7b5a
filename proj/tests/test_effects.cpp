#include <doctest.h>

#include <set>
#include <string>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/errors.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"
#include "scoped/signature.hpp"

using namespace scoped;

TEST_CASE("the registry ships the expected effects") {
  std::set<std::string> names;
  for (const Effect& e : effectRegistry()) names.insert(e.name);
  CHECK(names == std::set<std::string>{"exceptions", "exceptions-abort", "nondet",
                                       "nondet-count", "state", "strategy",
                                       "excstate"});
  CHECK(findEffect("nondet").handWrittenEM);
  CHECK(findEffect("nondet").handWrittenIndexed);
  CHECK_FALSE(findEffect("state").handWrittenEM);
}

TEST_CASE("lookups fail with the known names listed") {
  CHECK_THROWS_WITH_AS(findEffect("quantum"),
                       doctest::Contains("known effects:"), ConfigError);
  const Effect& exc = findEffect("exceptions");
  CHECK_THROWS_WITH_AS(findDemo(exc, "missing"),
                       doctest::Contains("known demos: catch42"), ConfigError);
}

TEST_CASE("every demo is well formed for its signature") {
  for (const Effect& e : effectRegistry()) {
    for (const auto& [name, p] : e.demos) {
      CAPTURE(e.name);
      CAPTURE(name);
      CHECK_NOTHROW(validate(e.signature, p));
    }
  }
}

TEST_CASE("every demo agrees across all four interpretations") {
  for (const Effect& e : effectRegistry()) {
    for (const auto& [name, p] : e.demos) {
      CAPTURE(e.name);
      CAPTURE(name);
      const Value reference = e.oracle(p);
      CHECK(handle(e.algebra, e.gen, p) == reference);
      CHECK(handleEM(e.em, e.gen, p) == reference);
      CHECK(hfold(e.indexed, 0, fmap(p, e.gen)).value == reference);
    }
  }
}

TEST_CASE("leaf domains stay inside the payload bounds") {
  for (const Effect& e : effectRegistry()) {
    CHECK(e.leafDomain == intRange(0, 5));
    for (const Value& leaf : e.leafDomain) CHECK(e.algebra.baseDomain.contains(e.gen(leaf)));
  }
}

TEST_CASE("state runs project one row of the table") {
  const Effect& st = findEffect("state");
  const Value table = handle(st.algebra, st.gen, findDemo(st, "putGet"));
  CHECK(runState(table, 0) == pairOf(intV(4), intV(4)));
  CHECK(runState(table, 7) == pairOf(intV(4), intV(4)));
  CHECK_THROWS_AS(runState(table, 8), ConfigError);
  CHECK_THROWS_AS(runState(table, -1), ConfigError);
  CHECK_THROWS_AS(runState(intV(3), 0), ConfigError);
}

TEST_CASE("carrier parameters are bounds checked") {
  CHECK_THROWS_AS(stateE(0), ConfigError);
  CHECK_THROWS_AS(stateE(65), ConfigError);
  CHECK_THROWS_AS(makeStateSig(0), ConfigError);
  CHECK_THROWS_AS(excStateE(65), ConfigError);
  CHECK_THROWS_AS(strategyAlg(-1), ConfigError);
  CHECK_THROWS_AS(makeStrategySig(65), ConfigError);
}

TEST_CASE("builders reject payloads outside the signature") {
  CHECK_THROWS_AS(putP(stateSig(), kStateDomainSize), SignatureViolation);
  CHECK_THROWS_AS(putP(stateSig(), -1), SignatureViolation);
  CHECK_THROWS_AS(boundedSearchP(strategySig(), kSearchDepthBound + 1,
                                 ret(intV(0))), SignatureViolation);
  CHECK_THROWS_AS(searchP(strategySig(), "IDS", ret(intV(0))), SignatureViolation);
  CHECK_NOTHROW(putP(stateSig(), kStateDomainSize - 1));
  CHECK_NOTHROW(boundedSearchP(strategySig(), kSearchDepthBound, ret(intV(0))));
}

TEST_CASE("generators embed leaves the way each carrier expects") {
  CHECK(findEffect("exceptions").gen(intV(2)) == just(intV(2)));
  CHECK(findEffect("nondet").gen(intV(2)) == Value::list({intV(2)}));
  CHECK(findEffect("nondet-count").gen(intV(2)) == intV(1));
  const Effect& st = findEffect("state");
  const Value table = st.gen(intV(2));
  REQUIRE(table.isList());
  REQUIRE(table.elements().size() == static_cast<std::size_t>(kStateDomainSize));
  CHECK(table.elements()[3] == pairOf(intV(3), intV(2)));
}

TEST_CASE("maybe and pair helpers") {
  CHECK(isJust(just(intV(1))));
  CHECK(isNothing(nothing()));
  CHECK_FALSE(isJust(nothing()));
  CHECK(justField(just(intV(9))) == intV(9));
  CHECK(pairFirst(pairOf(intV(1), intV(2))) == intV(1));
  CHECK(pairSecond(pairOf(intV(1), intV(2))) == intV(2));
}
