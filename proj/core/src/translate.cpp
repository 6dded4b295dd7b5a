#include "scoped/translate.hpp"

#include <utility>

#include "scoped/errors.hpp"

namespace scoped {

namespace {

std::vector<Prog> unboxAll(const std::vector<Value>& xs) {
  std::vector<Prog> out;
  out.reserve(xs.size());
  for (const Value& x : xs) {
    if (!x.isProgram())
      throw Error("syntax carrier holds programs, got " + x.str());
    out.push_back(x.prog());
  }
  return out;
}

}  // namespace

Carrier syntaxCarrier() {
  Carrier c;
  c.name = "programs";
  c.map = [](const Value& v, const UnaryFn& f) {
    if (!v.isProgram()) throw Error("syntax carrier holds programs, got " + v.str());
    return Value::program(fmap(v.prog(), f));
  };
  c.wellFormed = [](const Value& v) { return v.isProgram(); };
  return c;
}

FunctorialAlgebra emToFunctorial(const EMAlg& alg) {
  FunctorialAlgebra out;
  out.name = alg.name + "/functorial";
  out.endo.name = out.name;
  out.endo.carrier = syntaxCarrier();
  out.endo.returnE = [](const Value& x) { return Value::program(ret(x)); };
  out.endo.callE = [](const OpNode<Value>& node) {
    return Value::program(call(node.tag, node.payload, unboxAll(node.kids)));
  };
  out.endo.enterE = [](const ScopeNode<Value>& scope) {
    return Value::program(enter(scope.tag, scope.payload, unboxAll(scope.bodies)));
  };
  out.base.callB = alg.callEM;
  out.base.enterB = [alg](const ScopeNode<Value>& scope) {
    return alg.enterEM(ScopeNode<Prog>{scope.tag, scope.payload, unboxAll(scope.bodies)});
  };
  out.baseDomain = Domain{alg.name + "-carrier", [](const Value&) { return true; }};
  return out;
}

EMAlg functorialToEM(const FunctorialAlgebra& alg) {
  EMAlg out;
  out.name = alg.name + "/em";
  out.callEM = alg.base.callB;
  out.enterEM = [alg](const ScopeNode<Prog>& scope) {
    std::vector<Value> bodies;
    bodies.reserve(scope.bodies.size());
    for (const Prog& b : scope.bodies) bodies.push_back(hcata(alg.endo, b));
    return alg.base.enterB(ScopeNode<Value>{scope.tag, scope.payload, std::move(bodies)});
  };
  return out;
}

IxAlg functorialToIndexed(const FunctorialAlgebra& alg) {
  IxAlg out;
  out.name = alg.name + "/indexed";
  out.action = [alg](int level, const OpNode<Value>& node) {
    return level == 0 ? alg.base.callB(node) : alg.endo.callE(node);
  };
  out.demote = [alg](int level, const ScopeNode<Value>& scope) {
    return level == 0 ? alg.base.enterB(scope) : alg.endo.enterE(scope);
  };
  out.promote = [alg](int, const Value& v) { return alg.endo.returnE(v); };
  out.levelOk = [alg](int level, const Value& v) {
    // Level n is the carrier applied n times over the base domain.
    std::function<bool(int, const Value&)> ok = [&](int n, const Value& x) -> bool {
      if (n == 0) return alg.baseDomain.contains(x);
      if (!alg.endo.carrier.wellFormed(x)) return false;
      bool good = true;
      alg.endo.carrier.map(x, [&](const Value& e) {
        if (!ok(n - 1, e)) good = false;
        return e;
      });
      return good;
    };
    return ok(level, v);
  };
  return out;
}

EMAlg indexedToEM(const IxAlg& alg) {
  EMAlg out;
  out.name = alg.name + "/em";
  out.callEM = [alg](const OpNode<Value>& node) { return alg.action(0, node); };
  out.enterEM = [alg](const ScopeNode<Prog>& scope) {
    std::vector<Value> bodies;
    bodies.reserve(scope.bodies.size());
    for (const Prog& b : scope.bodies) {
      Prog lifted = fmap(b, [&](const Value& x) { return alg.promote(0, x); });
      bodies.push_back(hfold(alg, 1, lifted).value);
    }
    return alg.demote(0, ScopeNode<Value>{scope.tag, scope.payload, std::move(bodies)});
  };
  return out;
}

}  // namespace scoped
