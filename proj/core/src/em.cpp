#include "scoped/em.hpp"

#include <utility>

#include "scoped/errors.hpp"

namespace scoped {

Value handleEM(const EMAlg& alg, const UnaryFn& gen, const Prog& p) {
  return foldLayer(
      p, gen,
      [&](OpNode<Value>&& node) { return alg.callEM(node); },
      [&](const ScopeNode<Prog>& scope) {
        std::vector<Prog> bodies;
        bodies.reserve(scope.bodies.size());
        for (const Prog& b : scope.bodies) {
          bodies.push_back(fmap(b, [&](const Value& boxed) {
            return handleEM(alg, gen, bodyLeaf(boxed));
          }));
        }
        return alg.enterEM(ScopeNode<Prog>{scope.tag, scope.payload, std::move(bodies)});
      });
}

namespace {

Value singletonGen(const Value& x) { return Value::list({x}); }

EMAlg makeOnceAlgEM() {
  EMAlg alg;
  alg.name = "onceAlgEM";
  alg.callEM = [](const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return Value::list({});
    if (node.tag == "Or") return Value::concatLists(node.kids[0], node.kids[1]);
    throw UnhandledOperation("onceAlgEM has no clause for operation '" + node.tag + "'");
  };
  alg.enterEM = [](const ScopeNode<Prog>& scope) -> Value {
    if (scope.tag != "Once")
      throw UnhandledOperation("onceAlgEM has no clause for scope '" + scope.tag + "'");
    // The body's leaves are already result lists; wrapping them as singletons
    // makes the outer run produce the list of outcomes, one per branch.
    Value outcomes = handleEM(onceAlgEM(), singletonGen, scope.bodies[0]);
    const auto& xs = outcomes.elements();
    return xs.empty() ? Value::list({}) : xs.front();
  };
  return alg;
}

}  // namespace

const EMAlg& onceAlgEM() {
  static const EMAlg alg = makeOnceAlgEM();
  return alg;
}

}  // namespace scoped
