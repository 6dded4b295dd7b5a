#include "scoped/effects.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "scoped/errors.hpp"
#include "scoped/oracles.hpp"
#include "scoped/translate.hpp"

namespace scoped {

namespace {

std::vector<Value> unitOnly() { return {Value::unit()}; }

std::function<int(const Value&)> arityOf(int n) {
  return [n](const Value&) { return n; };
}

[[noreturn]] void noOpClause(const std::string& algebra, const std::string& tag) {
  throw UnhandledOperation(algebra + " has no clause for operation " + tag);
}

[[noreturn]] void noScopeClause(const std::string& algebra, const std::string& tag) {
  throw UnhandledOperation(algebra + " has no clause for scope " + tag);
}

void requireDomainSize(int domainSize) {
  if (domainSize < 1 || domainSize > 64)
    throw ConfigError("state domain size must be in [1, 64], got " +
                      std::to_string(domainSize));
}

void requireDepthBound(int depthBound) {
  if (depthBound < 0 || depthBound > 64)
    throw ConfigError("search depth bound must be in [0, 64], got " +
                      std::to_string(depthBound));
}

const Value& entryAt(const std::vector<Value>& xs, std::int64_t i, const char* who) {
  if (i < 0 || i >= static_cast<std::int64_t>(xs.size()))
    throw Error(std::string(who) + " index " + std::to_string(i) +
                " is outside a table of size " + std::to_string(xs.size()));
  return xs[static_cast<std::size_t>(i)];
}

bool isPair(const Value& v) {
  return v.isRecord() && v.tag() == "pair" && v.fields().size() == 2;
}

const std::vector<Value>& tableEntries(const Value& v, int n, const char* who) {
  if (!v.isList() || static_cast<int>(v.elements().size()) != n)
    throw Error(std::string(who) + " expects a table with " + std::to_string(n) +
                " entries, got " + v.str());
  return v.elements();
}

Value emptyList() { return Value::list({}); }

Value repeatedList(int count, const Value& v) {
  return Value::list(std::vector<Value>(static_cast<std::size_t>(count), v));
}

Value mapList(const Value& xs, const UnaryFn& f) {
  std::vector<Value> out;
  out.reserve(xs.elements().size());
  for (const Value& x : xs.elements()) out.push_back(f(x));
  return Value::list(std::move(out));
}

// ---------------------------------------------------------------- carriers

Carrier maybeCarrier() {
  Carrier c;
  c.name = "maybe";
  c.map = [](const Value& v, const UnaryFn& f) -> Value {
    if (isJust(v)) return just(f(justField(v)));
    if (isNothing(v)) return nothing();
    throw Error("maybe carrier expects Just or Nothing, got " + v.str());
  };
  c.wellFormed = [](const Value& v) { return isJust(v) || isNothing(v); };
  return c;
}

Carrier listCarrier() {
  Carrier c;
  c.name = "list";
  c.map = [](const Value& v, const UnaryFn& f) -> Value {
    if (!v.isList()) throw Error("list carrier expects a list, got " + v.str());
    return mapList(v, f);
  };
  c.wellFormed = [](const Value& v) { return v.isList(); };
  return c;
}

Carrier stateCarrier(int n) {
  Carrier c;
  c.name = "state-table";
  c.map = [n](const Value& v, const UnaryFn& f) -> Value {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const Value& e : tableEntries(v, n, "state-table map"))
      out.push_back(pairOf(pairFirst(e), f(pairSecond(e))));
    return Value::list(std::move(out));
  };
  c.wellFormed = [n](const Value& v) {
    if (!v.isList() || static_cast<int>(v.elements().size()) != n) return false;
    for (const Value& e : v.elements()) {
      if (!isPair(e) || !e.fields()[0].isInt()) return false;
      const std::int64_t s = e.fields()[0].asInt();
      if (s < 0 || s >= n) return false;
    }
    return true;
  };
  return c;
}

Value maybeMap(const Value& v, const UnaryFn& f) {
  if (isJust(v)) return just(f(justField(v)));
  if (isNothing(v)) return nothing();
  throw Error("expected Just or Nothing, got " + v.str());
}

Carrier excStateCarrier(int n) {
  Carrier c;
  c.name = "exc-state-table";
  c.map = [n](const Value& v, const UnaryFn& f) -> Value {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const Value& e : tableEntries(v, n, "exc-state-table map"))
      out.push_back(pairOf(pairFirst(e), maybeMap(pairSecond(e), f)));
    return Value::list(std::move(out));
  };
  c.wellFormed = [n](const Value& v) {
    if (!v.isList() || static_cast<int>(v.elements().size()) != n) return false;
    for (const Value& e : v.elements()) {
      if (!isPair(e) || !e.fields()[0].isInt()) return false;
      const std::int64_t s = e.fields()[0].asInt();
      if (s < 0 || s >= n) return false;
      const Value& m = e.fields()[1];
      if (!isJust(m) && !isNothing(m)) return false;
    }
    return true;
  };
  return c;
}

Value searchTriple(Value dfs, Value bfs, Value dbs) {
  return Value::record("search", {std::move(dfs), std::move(bfs), std::move(dbs)});
}

const std::vector<Value>& searchParts(const Value& v) {
  if (!v.isRecord() || v.tag() != "search" || v.fields().size() != 3)
    throw Error("search carrier expects a strategy triple, got " + v.str());
  return v.fields();
}

bool allLists(const Value& v) {
  if (!v.isList()) return false;
  for (const Value& x : v.elements())
    if (!x.isList()) return false;
  return true;
}

Carrier searchCarrier(int bound) {
  Carrier c;
  c.name = "search-triple";
  c.map = [](const Value& v, const UnaryFn& f) -> Value {
    const auto& parts = searchParts(v);
    UnaryFn inner = [&](const Value& level) { return mapList(level, f); };
    return searchTriple(mapList(parts[0], f), mapList(parts[1], inner),
                        mapList(parts[2], inner));
  };
  c.wellFormed = [bound](const Value& v) {
    if (!v.isRecord() || v.tag() != "search" || v.fields().size() != 3) return false;
    const auto& parts = v.fields();
    return parts[0].isList() && allLists(parts[1]) && allLists(parts[2]) &&
           static_cast<int>(parts[2].elements().size()) == bound + 1;
  };
  return c;
}

// ---------------------------------------------------------------- algebras

EndoAlg excEndo(bool recover) {
  EndoAlg e;
  e.name = recover ? "exc" : "exc-abort";
  e.carrier = maybeCarrier();
  e.returnE = [](const Value& v) { return just(v); };
  e.callE = [name = e.name](const OpNode<Value>& node) -> Value {
    if (node.tag == "Throw") return nothing();
    noOpClause(name, node.tag);
  };
  e.enterE = [recover, name = e.name](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Catch") noScopeClause(name, scope.tag);
    const Value& guarded = scope.bodies[0];
    if (isJust(guarded)) return justField(guarded);
    if (!recover) return nothing();
    const Value& recovery = scope.bodies[1];
    return isJust(recovery) ? justField(recovery) : nothing();
  };
  return e;
}

EndoAlg nondetEndo() {
  EndoAlg e;
  e.name = "nondet";
  e.carrier = listCarrier();
  e.returnE = [](const Value& v) { return Value::list({v}); };
  e.callE = [](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return emptyList();
    if (node.tag == "Or") return Value::concatLists(node.kids[0], node.kids[1]);
    noOpClause("nondet", node.tag);
  };
  e.enterE = [](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Once") noScopeClause("nondet", scope.tag);
    const auto& branches = scope.bodies[0].elements();
    return branches.empty() ? emptyList() : branches.front();
  };
  return e;
}

EndoAlg stateEndo(int n) {
  EndoAlg e;
  e.name = "state";
  e.carrier = stateCarrier(n);
  e.returnE = [n](const Value& v) {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) out.push_back(pairOf(intV(s), v));
    return Value::list(std::move(out));
  };
  e.callE = [n](const OpNode<Value>& node) -> Value {
    if (node.tag == "Put") {
      const auto& k = tableEntries(node.kids[0], n, "Put");
      return repeatedList(n, entryAt(k, node.payload.asInt(), "Put"));
    }
    if (node.tag == "Get") {
      std::vector<Value> out;
      out.reserve(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s)
        out.push_back(tableEntries(node.kids[static_cast<std::size_t>(s)], n, "Get")[s]);
      return Value::list(std::move(out));
    }
    noOpClause("state", node.tag);
  };
  e.enterE = [n](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Local") noScopeClause("state", scope.tag);
    const auto& body = tableEntries(scope.bodies[0], n, "Local");
    // Run the body under the payload state; its final state is dropped and
    // the continuation, itself a table, is resumed under the entry state.
    return pairSecond(entryAt(body, scope.payload.asInt(), "Local"));
  };
  return e;
}

EndoAlg excStateEndo(int n) {
  EndoAlg e;
  e.name = "exc-state";
  e.carrier = excStateCarrier(n);
  e.returnE = [n](const Value& v) {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) out.push_back(pairOf(intV(s), just(v)));
    return Value::list(std::move(out));
  };
  e.callE = [n](const OpNode<Value>& node) -> Value {
    if (node.tag == "Throw") {
      std::vector<Value> out;
      out.reserve(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) out.push_back(pairOf(intV(s), nothing()));
      return Value::list(std::move(out));
    }
    if (node.tag == "Put") {
      const auto& k = tableEntries(node.kids[0], n, "Put");
      return repeatedList(n, entryAt(k, node.payload.asInt(), "Put"));
    }
    if (node.tag == "Get") {
      std::vector<Value> out;
      out.reserve(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s)
        out.push_back(tableEntries(node.kids[static_cast<std::size_t>(s)], n, "Get")[s]);
      return Value::list(std::move(out));
    }
    noOpClause("exc-state", node.tag);
  };
  e.enterE = [n](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Catch") noScopeClause("exc-state", scope.tag);
    const auto& guarded = tableEntries(scope.bodies[0], n, "Catch");
    const auto& recovery = tableEntries(scope.bodies[1], n, "Catch");
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      const Value& g = guarded[static_cast<std::size_t>(s)];
      const std::int64_t s1 = pairFirst(g).asInt();
      const Value& m = pairSecond(g);
      if (isJust(m)) {
        out.push_back(entryAt(tableEntries(justField(m), n, "Catch"), s1, "Catch"));
        continue;
      }
      // The body failed: the recovery starts from the failure-point state.
      const Value& r = entryAt(recovery, s1, "Catch");
      const std::int64_t s2 = pairFirst(r).asInt();
      const Value& m2 = pairSecond(r);
      if (isJust(m2))
        out.push_back(entryAt(tableEntries(justField(m2), n, "Catch"), s2, "Catch"));
      else
        out.push_back(pairOf(intV(s2), nothing()));
    }
    return Value::list(std::move(out));
  };
  return e;
}

Value zipLongConcat(const Value& a, const Value& b) {
  const auto& xs = a.elements();
  const auto& ys = b.elements();
  std::vector<Value> out;
  const std::size_t size = std::max(xs.size(), ys.size());
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (i >= xs.size())
      out.push_back(ys[i]);
    else if (i >= ys.size())
      out.push_back(xs[i]);
    else
      out.push_back(Value::concatLists(xs[i], ys[i]));
  }
  return Value::list(std::move(out));
}

/// The branches a strategy scope keeps, in the order it visits them. The
/// folded body is a strategy triple whose element slots hold one value per
/// reachable branch.
std::vector<Value> selectBranches(const ScopeNode<Value>& scope, const char* who) {
  const auto& parts = searchParts(scope.bodies[0]);
  std::vector<Value> out;
  if (scope.tag == "DFS") {
    out = parts[0].elements();
  } else if (scope.tag == "BFS") {
    for (const Value& level : parts[1].elements())
      for (const Value& x : level.elements()) out.push_back(x);
  } else if (scope.tag == "DBS") {
    out = entryAt(parts[2].elements(), scope.payload.asInt(), "DBS").elements();
  } else {
    noScopeClause(who, scope.tag);
  }
  return out;
}

EndoAlg searchEndo(int bound) {
  EndoAlg e;
  e.name = "search";
  e.carrier = searchCarrier(bound);
  e.returnE = [bound](const Value& v) {
    Value leaf = Value::list({v});
    return searchTriple(leaf, Value::list({leaf}), repeatedList(bound + 1, leaf));
  };
  e.callE = [bound](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail")
      return searchTriple(emptyList(), emptyList(),
                          repeatedList(bound + 1, emptyList()));
    if (node.tag == "Or") {
      const auto& x = searchParts(node.kids[0]);
      const auto& y = searchParts(node.kids[1]);
      // Both branches sit one Or-level deeper, so their levels and their
      // depth-budget rows shift down by one.
      std::vector<Value> levels;
      levels.push_back(emptyList());
      const Value zipped = zipLongConcat(x[1], y[1]);
      for (const Value& level : zipped.elements()) levels.push_back(level);
      std::vector<Value> table;
      table.reserve(static_cast<std::size_t>(bound) + 1);
      table.push_back(emptyList());
      const auto& xt = x[2].elements();
      const auto& yt = y[2].elements();
      for (int d = 1; d <= bound; ++d)
        table.push_back(Value::concatLists(xt[static_cast<std::size_t>(d) - 1],
                                           yt[static_cast<std::size_t>(d) - 1]));
      return searchTriple(Value::concatLists(x[0], y[0]),
                          Value::list(std::move(levels)),
                          Value::list(std::move(table)));
    }
    noOpClause("search", node.tag);
  };
  e.enterE = [bound](const ScopeNode<Value>& scope) -> Value {
    Value dfs = emptyList();
    Value bfs = emptyList();
    std::vector<Value> table(static_cast<std::size_t>(bound) + 1, emptyList());
    for (const Value& branch : selectBranches(scope, "search")) {
      const auto& parts = searchParts(branch);
      dfs = Value::concatLists(std::move(dfs), parts[0]);
      bfs = zipLongConcat(bfs, parts[1]);
      const auto& row = parts[2].elements();
      for (int d = 0; d <= bound; ++d)
        table[static_cast<std::size_t>(d)] = Value::concatLists(
            std::move(table[static_cast<std::size_t>(d)]),
            row[static_cast<std::size_t>(d)]);
    }
    return searchTriple(std::move(dfs), std::move(bfs), Value::list(std::move(table)));
  };
  return e;
}

}  // namespace

// -------------------------------------------------------------- signatures

const Signature& exceptionsSig() {
  static const Signature sig("exceptions", {AlgOp{"Throw", unitOnly(), arityOf(0)}},
                             {ScopeOp{"Catch", unitOnly(), arityOf(2)}});
  return sig;
}

const Signature& nondetSig() {
  static const Signature sig(
      "nondet",
      {AlgOp{"Fail", unitOnly(), arityOf(0)}, AlgOp{"Or", unitOnly(), arityOf(2)}},
      {ScopeOp{"Once", unitOnly(), arityOf(1)}});
  return sig;
}

Signature makeStateSig(int domainSize) {
  requireDomainSize(domainSize);
  std::vector<Value> states = intRange(0, domainSize);
  return Signature("state",
                   {AlgOp{"Put", states, arityOf(1)},
                    AlgOp{"Get", unitOnly(), arityOf(domainSize)}},
                   {ScopeOp{"Local", states, arityOf(1)}});
}

const Signature& stateSig() {
  static const Signature sig = makeStateSig(kStateDomainSize);
  return sig;
}

Signature makeStrategySig(int depthBound) {
  requireDepthBound(depthBound);
  return Signature(
      "strategy",
      {AlgOp{"Fail", unitOnly(), arityOf(0)}, AlgOp{"Or", unitOnly(), arityOf(2)}},
      {ScopeOp{"DFS", unitOnly(), arityOf(1)}, ScopeOp{"BFS", unitOnly(), arityOf(1)},
       ScopeOp{"DBS", intRange(0, depthBound + 1), arityOf(1)}});
}

const Signature& strategySig() {
  static const Signature sig = makeStrategySig(kSearchDepthBound);
  return sig;
}

Signature makeExcStateSig(int domainSize) {
  requireDomainSize(domainSize);
  std::vector<Value> states = intRange(0, domainSize);
  return Signature("excstate",
                   {AlgOp{"Throw", unitOnly(), arityOf(0)},
                    AlgOp{"Put", states, arityOf(1)},
                    AlgOp{"Get", unitOnly(), arityOf(domainSize)}},
                   {ScopeOp{"Catch", unitOnly(), arityOf(2)}});
}

const Signature& excStateSig() {
  static const Signature sig = makeExcStateSig(kStateDomainSize);
  return sig;
}

// ------------------------------------------------------------ value shapes

Value just(Value v) { return Value::record("Just", {std::move(v)}); }

Value nothing() { return Value::record("Nothing", {}); }

bool isJust(const Value& v) {
  return v.isRecord() && v.tag() == "Just" && v.fields().size() == 1;
}

bool isNothing(const Value& v) {
  return v.isRecord() && v.tag() == "Nothing" && v.fields().empty();
}

const Value& justField(const Value& v) {
  if (!isJust(v)) throw Error("expected a Just, got " + v.str());
  return v.fields()[0];
}

Value pairOf(Value a, Value b) {
  return Value::record("pair", {std::move(a), std::move(b)});
}

const Value& pairFirst(const Value& v) {
  if (!isPair(v)) throw Error("expected a pair, got " + v.str());
  return v.fields()[0];
}

const Value& pairSecond(const Value& v) {
  if (!isPair(v)) throw Error("expected a pair, got " + v.str());
  return v.fields()[1];
}

// ----------------------------------------------------- packaged algebras

FunctorialAlgebra excE() { return selfBased(excEndo(true)); }

FunctorialAlgebra excEAbort() { return selfBased(excEndo(false)); }

FunctorialAlgebra ndetE() { return selfBased(nondetEndo()); }

FunctorialAlgebra ndetCount() {
  FunctorialAlgebra a;
  a.name = "nondet-count";
  a.endo = nondetEndo();
  a.base.callB = [](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return intV(0);
    if (node.tag == "Or") return intV(node.kids[0].asInt() + node.kids[1].asInt());
    noOpClause("nondet-count", node.tag);
  };
  a.base.enterB = [](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Once") noScopeClause("nondet-count", scope.tag);
    const auto& branches = scope.bodies[0].elements();
    return branches.empty() ? intV(0) : intV(branches.front().asInt());
  };
  a.baseDomain = Domain{"count", [](const Value& v) { return v.isInt(); }};
  return a;
}

FunctorialAlgebra ndetIsEmpty() {
  FunctorialAlgebra a;
  a.name = "nondet-empty";
  a.endo = nondetEndo();
  a.base.callB = [](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return Value::boolean(true);
    if (node.tag == "Or")
      return Value::boolean(node.kids[0].asBool() && node.kids[1].asBool());
    noOpClause("nondet-empty", node.tag);
  };
  a.base.enterB = [](const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Once") noScopeClause("nondet-empty", scope.tag);
    const auto& branches = scope.bodies[0].elements();
    return branches.empty() ? Value::boolean(true)
                            : Value::boolean(branches.front().asBool());
  };
  a.baseDomain = Domain{"empty-flag", [](const Value& v) { return v.isBool(); }};
  return a;
}

FunctorialAlgebra stateE(int domainSize) {
  requireDomainSize(domainSize);
  return selfBased(stateEndo(domainSize));
}

FunctorialAlgebra strategyAlg(int depthBound) {
  requireDepthBound(depthBound);
  FunctorialAlgebra a;
  a.name = "strategy";
  a.endo = searchEndo(depthBound);
  a.base.callB = [](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return emptyList();
    if (node.tag == "Or") return Value::concatLists(node.kids[0], node.kids[1]);
    noOpClause("strategy", node.tag);
  };
  a.base.enterB = [](const ScopeNode<Value>& scope) -> Value {
    Value out = emptyList();
    for (const Value& branch : selectBranches(scope, "strategy"))
      out = Value::concatLists(std::move(out), branch);
    return out;
  };
  a.baseDomain = Domain{"list", [](const Value& v) { return v.isList(); }};
  return a;
}

FunctorialAlgebra excStateE(int domainSize) {
  requireDomainSize(domainSize);
  return selfBased(excStateEndo(domainSize));
}

Value runState(const Value& table, int s0) {
  if (!table.isList())
    throw ConfigError("a state run needs a table result, got " + table.str());
  const auto& xs = table.elements();
  if (s0 < 0 || s0 >= static_cast<int>(xs.size()))
    throw ConfigError("initial state " + std::to_string(s0) +
                      " is outside the table of size " + std::to_string(xs.size()));
  return xs[static_cast<std::size_t>(s0)];
}

// ---------------------------------------------------------------- builders

Prog throwP(const Signature& sig) { return op(sig, "Throw", Value::unit(), {}); }

Prog catchP(const Signature& sig, Prog guarded, Prog recovery) {
  return sc(sig, "Catch", Value::unit(), {std::move(guarded), std::move(recovery)});
}

Prog failP(const Signature& sig) { return op(sig, "Fail", Value::unit(), {}); }

Prog orP(const Signature& sig, Prog left, Prog right) {
  return op(sig, "Or", Value::unit(), {std::move(left), std::move(right)});
}

Prog onceP(const Signature& sig, Prog body) {
  return sc(sig, "Once", Value::unit(), {std::move(body)});
}

Prog putP(const Signature& sig, std::int64_t s) {
  return op(sig, "Put", intV(s), {ret(Value::unit())});
}

Prog getP(const Signature& sig) {
  const int n = sig.opOrThrow("Get").arity(Value::unit());
  std::vector<Prog> kids;
  kids.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) kids.push_back(ret(intV(s)));
  return op(sig, "Get", Value::unit(), std::move(kids));
}

Prog localP(const Signature& sig, std::int64_t s, Prog body) {
  return sc(sig, "Local", intV(s), {std::move(body)});
}

Prog searchP(const Signature& sig, const std::string& strategyTag, Prog body) {
  return sc(sig, strategyTag, Value::unit(), {std::move(body)});
}

Prog boundedSearchP(const Signature& sig, std::int64_t bound, Prog body) {
  return sc(sig, "DBS", intV(bound), {std::move(body)});
}

Prog seqP(Prog a, Prog b) {
  return bind(a, [&b](const Value&) { return b; });
}

// ---------------------------------------------------------------- registry

namespace {

Prog retI(std::int64_t n) { return ret(intV(n)); }

Effect makeEffect(std::string name, const Signature& sig, FunctorialAlgebra algebra,
                  UnaryFn gen, std::function<Value(const Prog&)> oracle) {
  Effect e;
  e.name = std::move(name);
  e.signature = sig;
  e.em = functorialToEM(algebra);
  e.indexed = functorialToIndexed(algebra);
  e.algebra = std::move(algebra);
  e.gen = std::move(gen);
  e.oracle = std::move(oracle);
  e.leafDomain = intRange(0, 5);
  return e;
}

std::vector<Effect> buildRegistry() {
  std::vector<Effect> out;
  const UnaryFn singleton = [](const Value& v) { return Value::list({v}); };

  {
    const Signature& sig = exceptionsSig();
    Effect e = makeEffect("exceptions", sig, excE(),
                          [](const Value& v) { return just(v); }, oracleExceptions);
    e.demos.emplace_back("catch42",
                         bind(catchP(sig, throwP(sig), retI(42)),
                              [](const Value& x) { return retI(x.asInt() + 1); }));
    e.demos.emplace_back("guarded",
                         bind(catchP(sig, retI(1), retI(2)),
                              [](const Value& x) { return retI(x.asInt() + 1); }));
    e.demos.emplace_back("bareThrow", throwP(sig));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = exceptionsSig();
    Effect e = makeEffect("exceptions-abort", sig, excEAbort(),
                          [](const Value& v) { return just(v); },
                          oracleExceptionsAbort);
    e.demos.emplace_back("catch42Abort",
                         bind(catchP(sig, throwP(sig), retI(42)),
                              [](const Value& x) { return retI(x.asInt() + 1); }));
    e.demos.emplace_back("guardedAbort",
                         bind(catchP(sig, retI(1), retI(2)),
                              [](const Value& x) { return retI(x.asInt() + 1); }));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = nondetSig();
    Effect e = makeEffect("nondet", sig, ndetE(), singleton, oracleNondet);
    e.em = onceAlgEM();
    e.handWrittenEM = true;
    e.indexed = onceIx();
    e.handWrittenIndexed = true;
    e.demos.emplace_back("oncePair",
                         bind(onceP(sig, orP(sig, retI(1), retI(3))),
                              [&sig](const Value& n) {
                                return orP(sig, ret(n), retI(n.asInt() + 1));
                              }));
    e.demos.emplace_back("orTriple", orP(sig, orP(sig, retI(1), retI(2)), retI(3)));
    e.demos.emplace_back("orFail", orP(sig, retI(1), failP(sig)));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = nondetSig();
    Effect e = makeEffect("nondet-count", sig, ndetCount(),
                          [](const Value&) { return intV(1); }, oracleNondetCount);
    e.demos.emplace_back("countOr", orP(sig, retI(1), retI(2)));
    e.demos.emplace_back("countOnce", onceP(sig, orP(sig, retI(1), retI(2))));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = stateSig();
    FunctorialAlgebra alg = stateE(kStateDomainSize);
    UnaryFn gen = alg.endo.returnE;
    Effect e = makeEffect("state", sig, std::move(alg), std::move(gen),
                          [](const Prog& p) { return oracleState(p, kStateDomainSize); });
    e.demos.emplace_back("putGet", seqP(putP(sig, 4), getP(sig)));
    e.demos.emplace_back("localRestore", seqP(localP(sig, 5, putP(sig, 7)), getP(sig)));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = strategySig();
    Effect e = makeEffect("strategy", sig, strategyAlg(kSearchDepthBound), singleton,
                          [](const Prog& p) { return oracleStrategy(p, kSearchDepthBound); });
    Prog tree = orP(sig, orP(sig, retI(1), retI(2)), retI(3));
    e.demos.emplace_back("dfsTriple", searchP(sig, "DFS", tree));
    e.demos.emplace_back("bfsTriple", searchP(sig, "BFS", tree));
    e.demos.emplace_back("dbsOne",
                         boundedSearchP(sig, 1, orP(sig, retI(1), orP(sig, retI(2), retI(3)))));
    out.push_back(std::move(e));
  }

  {
    const Signature& sig = excStateSig();
    FunctorialAlgebra alg = excStateE(kStateDomainSize);
    UnaryFn gen = alg.endo.returnE;
    Effect e = makeEffect("excstate", sig, std::move(alg), std::move(gen),
                          [](const Prog& p) { return oracleExcState(p, kStateDomainSize); });
    // A bounded rendition of guarded division: divide 6 by the current state,
    // recover with 4 on division by zero, then store the successor.
    Prog divide = bind(getP(sig), [&sig](const Value& s) {
      if (s.asInt() == 0) return throwP(sig);
      const std::int64_t q = 6 / s.asInt();
      return seqP(putP(sig, q), retI(q));
    });
    e.demos.emplace_back("safeDiv",
                         bind(catchP(sig, std::move(divide), retI(4)),
                              [&sig](const Value& x) {
                                return seqP(putP(sig, x.asInt() + 1), ret(x));
                              }));
    e.demos.emplace_back("recoverState",
                         bind(catchP(sig, seqP(putP(sig, 3), throwP(sig)), getP(sig)),
                              [](const Value& x) { return ret(x); }));
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

const std::vector<Effect>& effectRegistry() {
  static const std::vector<Effect> registry = buildRegistry();
  return registry;
}

const Effect& findEffect(std::string_view name) {
  for (const Effect& e : effectRegistry())
    if (e.name == name) return e;
  std::string known;
  for (const Effect& e : effectRegistry()) {
    if (!known.empty()) known += ", ";
    known += e.name;
  }
  throw ConfigError("unknown effect '" + std::string(name) + "'; known effects: " + known);
}

const Prog& findDemo(const Effect& effect, std::string_view name) {
  for (const auto& [demoName, prog] : effect.demos)
    if (demoName == name) return prog;
  std::string known;
  for (const auto& [demoName, prog] : effect.demos) {
    if (!known.empty()) known += ", ";
    known += demoName;
  }
  throw ConfigError("effect " + effect.name + " has no demo '" + std::string(name) +
                    "'; known demos: " + known);
}

}  // namespace scoped
