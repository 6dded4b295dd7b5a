#include <doctest.h>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"
#include "scoped/functorial.hpp"
#include "scoped/generate.hpp"
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

}  // namespace

TEST_CASE("a failed body falls through to the recovery") {
  const Effect& exc = findEffect("exceptions");
  const Prog& catch42 = findDemo(exc, "catch42");
  CHECK(handleE(excE().endo, catch42) == just(intV(43)));
  CHECK(handleE(excEAbort().endo, catch42) == nothing());
  CHECK(handleE(excE().endo, throwP(exc.signature)) == nothing());
  CHECK(handleE(excEAbort().endo, throwP(exc.signature)) == nothing());
}

TEST_CASE("a successful body skips the recovery under both catch variants") {
  const Effect& exc = findEffect("exceptions");
  const Prog& guarded = findDemo(exc, "guarded");
  CHECK(handleE(excE().endo, guarded) == just(intV(2)));
  CHECK(handleE(excEAbort().endo, guarded) == just(intV(2)));
}

TEST_CASE("catch interprets as its body when that succeeds, its recovery otherwise") {
  const Effect& exc = findEffect("exceptions");
  const FunctorialAlgebra alg = excE();
  GenConfig cfg;
  cfg.signature = "exceptions";
  cfg.maxDepth = 3;
  cfg.corpusSize = 60;
  const std::vector<Prog> corpus = genPrograms(cfg);
  for (const Prog& guarded : corpus) {
    for (const Prog& recovery : {ret(intV(4)), throwP(exc.signature)}) {
      const Value whole =
          handle(alg, alg.endo.returnE, catchP(exc.signature, guarded, recovery));
      const Value body = handle(alg, alg.endo.returnE, guarded);
      const Value fallback = handle(alg, alg.endo.returnE, recovery);
      CHECK(whole == (isJust(body) ? body : fallback));
    }
  }
}

TEST_CASE("once keeps only the first branch") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  const Prog& oncePair = findDemo(nd, "oncePair");
  CHECK(handleE(ndetE().endo, oncePair) == listOf({1, 2}));
  CHECK(handle(nd.algebra, nd.gen, orP(sig, ret(intV(1)), failP(sig))) == listOf({1}));
  CHECK(handle(nd.algebra, nd.gen, onceP(sig, failP(sig))) == listOf({}));
  CHECK(handle(nd.algebra, nd.gen,
               onceP(sig, onceP(sig, orP(sig, ret(intV(3)), ret(intV(4)))))) ==
        listOf({3}));
}

TEST_CASE("counting and emptiness reinterpret the same programs at the base") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  const Prog two = orP(sig, ret(intV(1)), ret(intV(2)));
  const UnaryFn one = [](const Value&) { return intV(1); };
  const UnaryFn notEmpty = [](const Value&) { return Value::boolean(false); };
  CHECK(handle(ndetCount(), one, two) == intV(2));
  CHECK(handle(ndetCount(), one, onceP(sig, two)) == intV(1));
  CHECK(handle(ndetCount(), one, failP(sig)) == intV(0));
  CHECK(handle(ndetIsEmpty(), notEmpty, two) == Value::boolean(false));
  CHECK(handle(ndetIsEmpty(), notEmpty, failP(sig)) == Value::boolean(true));
  CHECK(handle(ndetIsEmpty(), notEmpty, onceP(sig, failP(sig))) ==
        Value::boolean(true));
}

TEST_CASE("state tables thread the store and local restores it") {
  const Effect& st = findEffect("state");
  const Signature& sig = st.signature;

  const Value putGet = handle(st.algebra, st.gen, findDemo(st, "putGet"));
  CHECK(runState(putGet, 0) == pairOf(intV(4), intV(4)));
  CHECK(runState(putGet, 7) == pairOf(intV(4), intV(4)));

  const Value get3 = handle(st.algebra, st.gen,
                            bind(getP(sig), [](const Value& s) { return ret(s); }));
  CHECK(runState(get3, 3) == pairOf(intV(3), intV(3)));

  // The body runs under the local store; the continuation resumes under the
  // store saved at entry.
  const Value localRun = handle(st.algebra, st.gen, findDemo(st, "localRestore"));
  CHECK(runState(localRun, 2) == pairOf(intV(2), intV(2)));
}

TEST_CASE("local over a ten-state store") {
  const Signature sig = makeStateSig(10);
  const FunctorialAlgebra alg = stateE(10);
  const Prog p = seqP(localP(sig, 5, putP(sig, 9)), getP(sig));
  const Value table = handleE(alg.endo, p);
  CHECK(runState(table, 2) == pairOf(intV(2), intV(2)));
  CHECK(runState(table, 6) == pairOf(intV(6), intV(6)));
}

TEST_CASE("search strategies select branches by depth") {
  const Effect& search = findEffect("strategy");
  const Signature& sig = search.signature;
  CHECK(handle(search.algebra, search.gen, findDemo(search, "dfsTriple")) ==
        listOf({1, 2, 3}));
  CHECK(handle(search.algebra, search.gen, findDemo(search, "bfsTriple")) ==
        listOf({3, 1, 2}));
  CHECK(handle(search.algebra, search.gen, findDemo(search, "dbsOne")) == listOf({1}));

  // Without a scope the base flattens depth-first.
  const Prog plain = orP(sig, orP(sig, ret(intV(1)), ret(intV(2))), ret(intV(3)));
  CHECK(handle(search.algebra, search.gen, plain) == listOf({1, 2, 3}));

  // A depth bound of zero keeps only leaves reached before any Or.
  CHECK(handle(search.algebra, search.gen, boundedSearchP(sig, 0, plain)) ==
        listOf({}));
  CHECK(handle(search.algebra, search.gen, boundedSearchP(sig, 0, ret(intV(9)))) ==
        listOf({9}));
  CHECK(handle(search.algebra, search.gen, boundedSearchP(sig, 2, plain)) ==
        listOf({1, 2, 3}));
}

TEST_CASE("exceptions over state: recovery starts from the failure store") {
  const Effect& es = findEffect("excstate");
  const Value safeDiv = handle(es.algebra, es.gen, findDemo(es, "safeDiv"));
  CHECK(runState(safeDiv, 0) == pairOf(intV(5), just(intV(4))));
  CHECK(runState(safeDiv, 2) == pairOf(intV(4), just(intV(3))));
  CHECK(runState(safeDiv, 3) == pairOf(intV(3), just(intV(2))));

  const Value recover = handle(es.algebra, es.gen, findDemo(es, "recoverState"));
  CHECK(runState(recover, 0) == pairOf(intV(3), just(intV(3))));
  CHECK(runState(recover, 5) == pairOf(intV(3), just(intV(3))));

  const Signature& sig = es.signature;
  const Prog doomed = catchP(sig, throwP(sig), throwP(sig));
  const Value table = handle(es.algebra, es.gen, doomed);
  CHECK(runState(table, 1) == pairOf(intV(1), nothing()));
}

TEST_CASE("selfBased widens an endo algebra to its own base") {
  const FunctorialAlgebra alg = selfBased(ndetE().endo);
  CHECK(alg.name == "nondet");
  CHECK(alg.baseDomain.contains(listOf({1, 2})));
  CHECK(!alg.baseDomain.contains(intV(1)));
  const Signature& sig = findEffect("nondet").signature;
  const Prog p = orP(sig, ret(intV(1)), ret(intV(2)));
  CHECK(handle(alg, alg.endo.returnE, p) == handleE(ndetE().endo, p));
}

TEST_CASE("hcata folds scope bodies through both layers") {
  const Effect& nd = findEffect("nondet");
  const Signature& sig = nd.signature;
  // once (or 1 2) >>= \n -> or n (n+1), folded on the list carrier.
  const Prog& oncePair = findDemo(nd, "oncePair");
  CHECK(hcata(nd.algebra.endo, oncePair) == listOf({1, 2}));
  CHECK(hcata(nd.algebra.endo, orP(sig, ret(intV(5)), failP(sig))) == listOf({5}));
}

TEST_CASE("programs outside the algebra's signature are rejected") {
  const Signature& state = stateSig();
  CHECK_THROWS_AS(handleE(excE().endo, putP(state, 1)), UnhandledOperation);
  CHECK_THROWS_AS(handleE(ndetE().endo, getP(state)), UnhandledOperation);
  const Signature& nd = nondetSig();
  CHECK_THROWS_AS(handleE(excE().endo, onceP(nd, ret(intV(1)))), UnhandledOperation);
}
