#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scoped/em.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"
#include "scoped/prog.hpp"
#include "scoped/signature.hpp"

namespace scoped {

inline constexpr int kStateDomainSize = 8;
inline constexpr int kSearchDepthBound = 8;

/// Throw (no continuations) with a two-body Catch scope: the guarded program
/// and the recovery.
const Signature& exceptionsSig();

/// Fail and binary Or, with a single-body Once scope.
const Signature& nondetSig();

/// Put(s) and Get over the finite state domain {0..domainSize-1}; Get takes
/// one continuation per state value. Local(s) runs its body under s and
/// resumes the continuation under the state saved at entry.
Signature makeStateSig(int domainSize);
const Signature& stateSig();

/// Fail and Or with three search scopes: DFS, BFS, and depth-bounded DBS(d)
/// for d in {0..depthBound}.
Signature makeStrategySig(int depthBound);
const Signature& strategySig();

/// Exceptions combined with finite state: Throw, Put, Get, and Catch.
Signature makeExcStateSig(int domainSize);
const Signature& excStateSig();

// Maybe and pair values, shared by several carriers.
Value just(Value v);
Value nothing();
bool isJust(const Value& v);
bool isNothing(const Value& v);
const Value& justField(const Value& v);
Value pairOf(Value a, Value b);
const Value& pairFirst(const Value& v);
const Value& pairSecond(const Value& v);

/// Exception handling on the Maybe carrier: Throw interprets to Nothing; a
/// Catch whose guarded body fails falls through to the recovery.
FunctorialAlgebra excE();

/// Variant that discards the recovery: a failed body aborts the whole Catch.
FunctorialAlgebra excEAbort();

/// Nondeterminism on the list carrier: Fail is empty, Or concatenates,
/// entering Once keeps the first branch's results.
FunctorialAlgebra ndetE();

/// Same list endo with a counting base: the interpretation is the number of
/// results, computed without ever building the result list at the base.
FunctorialAlgebra ndetCount();

/// Same list endo with a boolean base: whether the result list is empty.
FunctorialAlgebra ndetIsEmpty();

/// State on the table carrier: a value of F x lists, for every input state,
/// the pair (output state, x).
FunctorialAlgebra stateE(int domainSize = kStateDomainSize);

/// Search strategies on a triple carrier: depth-first results, breadth-first
/// levels keyed by Or-depth, and a table of depth-bounded results up to
/// depthBound. The base interpretation is the depth-first list.
FunctorialAlgebra strategyAlg(int depthBound = kSearchDepthBound);

/// Exceptions over state: tables of (output state, Maybe x). A Catch body
/// runs from the entry state; its recovery runs from the failure state.
FunctorialAlgebra excStateE(int domainSize = kStateDomainSize);

/// Projects the run of a state table at one initial state.
Value runState(const Value& table, int s0);

// Checked program builders over the signatures above.
Prog throwP(const Signature& sig);
Prog catchP(const Signature& sig, Prog guarded, Prog recovery);
Prog failP(const Signature& sig);
Prog orP(const Signature& sig, Prog left, Prog right);
Prog onceP(const Signature& sig, Prog body);
Prog putP(const Signature& sig, std::int64_t s);
Prog getP(const Signature& sig);
Prog localP(const Signature& sig, std::int64_t s, Prog body);
Prog searchP(const Signature& sig, const std::string& strategyTag, Prog body);
Prog boundedSearchP(const Signature& sig, std::int64_t bound, Prog body);

/// Sequencing: run a, discard its value, run b.
Prog seqP(Prog a, Prog b);

/// One named effect wired up for the harness: its signature, the functorial
/// algebra, the other two disciplines (hand-written where the library ships
/// one, translated otherwise), a generator for leaves, a reference oracle
/// that matches the functorial interpretation shape, and demo programs.
struct Effect {
  std::string name;
  Signature signature;
  FunctorialAlgebra algebra;
  UnaryFn gen;
  EMAlg em;
  bool handWrittenEM = false;
  IxAlg indexed;
  bool handWrittenIndexed = false;
  std::function<Value(const Prog&)> oracle;
  std::vector<std::pair<std::string, Prog>> demos;
  std::vector<Value> leafDomain;
};

const std::vector<Effect>& effectRegistry();
const Effect& findEffect(std::string_view name);
const Prog& findDemo(const Effect& effect, std::string_view name);

}  // namespace scoped
