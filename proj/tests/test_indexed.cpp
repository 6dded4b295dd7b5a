#include <doctest.h>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"
#include "scoped/indexed.hpp"
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

Prog premap(const Prog& p) {
  return fmap(p, [](const Value& v) { return Value::list({v}); });
}

}  // namespace

TEST_CASE("hfold interprets once level by level") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  const Leveled out = hfold(onceIx(), 0, premap(findDemo(nd, "oncePair")));
  CHECK(out.level == 0);
  CHECK(out.value == listOf({1, 2}));

  CHECK(hfold(onceIx(), 0, premap(onceP(sig, failP(sig)))).value == listOf({}));
  CHECK(hfold(onceIx(), 0,
              premap(onceP(sig, onceP(sig, orP(sig, ret(intV(7)), ret(intV(8)))))))
            .value == listOf({7}));
}

TEST_CASE("levels above zero carry one more list layer") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  // At level 1 the leaves must be lists of lists.
  const Prog p = fmap(orP(sig, ret(intV(1)), ret(intV(2))), [](const Value& v) {
    return Value::list({Value::list({v})});
  });
  const Leveled out = hfold(onceIx(), 1, p);
  CHECK(out.level == 1);
  CHECK(out.value == Value::list({listOf({1}), listOf({2})}));
}

TEST_CASE("the level discipline is enforced on every produced value") {
  const Effect& nd = findEffect("nondet");
  // Raw integer leaves are not level-0 carrier values.
  CHECK_THROWS_AS(hfold(onceIx(), 0, findDemo(nd, "oncePair")), LevelViolation);
  CHECK_THROWS_AS(hfold(onceIx(), -1, premap(ret(intV(1)))), LevelViolation);

  // An algebra whose promotion forgets the extra layer is caught at once.
  IxAlg broken = onceIx();
  broken.name = "broken-promote";
  broken.promote = [](int, const Value& v) { return v; };
  const Signature& sig = nd.signature;
  CHECK_THROWS_AS(hfold(broken, 0, premap(onceP(sig, ret(intV(1))))), LevelViolation);
}

TEST_CASE("an unchecked algebra runs without the discipline") {
  const Effect& nd = findEffect("nondet");
  IxAlg loose = onceIx();
  loose.levelOk = nullptr;
  CHECK(hfold(loose, 0, premap(findDemo(nd, "oncePair"))).value == listOf({1, 2}));
}

TEST_CASE("unknown tags are rejected") {
  const Signature& state = stateSig();
  CHECK_THROWS_AS(hfold(onceIx(), 0, premap(putP(state, 1))), UnhandledOperation);
  CHECK_THROWS_AS(hfold(onceIx(), 0, premap(localP(state, 1, ret(intV(0))))),
                  UnhandledOperation);
}
