#include <doctest.h>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/errors.hpp"
#include "scoped/prog.hpp"
#include "scoped/value.hpp"

using namespace scoped;

namespace {

Value listOf(std::vector<std::int64_t> xs) {
  std::vector<Value> out;
  out.reserve(xs.size());
  for (const std::int64_t x : xs) out.push_back(intV(x));
  return Value::list(std::move(out));
}

const UnaryFn kSingleton = [](const Value& v) { return Value::list({v}); };

}  // namespace

TEST_CASE("the em once algebra reenters the body recursively") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  CHECK(handleEM(onceAlgEM(), kSingleton, findDemo(nd, "oncePair")) == listOf({1, 2}));
  CHECK(handleEM(onceAlgEM(), kSingleton,
                 onceP(sig, orP(sig, orP(sig, ret(intV(1)), ret(intV(2))),
                                ret(intV(3))))) == listOf({1}));
  CHECK(handleEM(onceAlgEM(), kSingleton, onceP(sig, failP(sig))) == listOf({}));
  CHECK(handleEM(onceAlgEM(), kSingleton,
                 onceP(sig, onceP(sig, orP(sig, ret(intV(4)), ret(intV(5)))))) ==
        listOf({4}));
}

TEST_CASE("em handling without scopes is a plain fold") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  CHECK(handleEM(onceAlgEM(), kSingleton, ret(intV(9))) == listOf({9}));
  CHECK(handleEM(onceAlgEM(), kSingleton,
                 orP(sig, ret(intV(1)), orP(sig, failP(sig), ret(intV(2))))) ==
        listOf({1, 2}));
}

TEST_CASE("once keeps the first branch's whole continuation") {
  // or is algebraic, so the continuation after once distributes over its
  // branches only outside the scope: once picks branch 1, then the
  // continuation still forks.
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  const Prog p = bind(onceP(sig, orP(sig, ret(intV(1)), ret(intV(2)))),
                      [&](const Value& n) {
                        return orP(sig, ret(n), ret(intV(n.asInt() + 10)));
                      });
  CHECK(handleEM(onceAlgEM(), kSingleton, p) == listOf({1, 11}));
}

TEST_CASE("the registry em algebras agree with their functorial sources") {
  for (const char* name : {"exceptions", "state", "excstate", "strategy"}) {
    const Effect& effect = findEffect(name);
    for (const auto& demo : effect.demos) {
      CHECK(handleEM(effect.em, effect.gen, demo.second) ==
            handle(effect.algebra, effect.gen, demo.second));
    }
  }
}

TEST_CASE("unknown operations are rejected by the em clauses") {
  const Signature& state = stateSig();
  CHECK_THROWS_AS(handleEM(onceAlgEM(), kSingleton, putP(state, 1)),
                  UnhandledOperation);
}
