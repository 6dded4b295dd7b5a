#include "scoped/functorial.hpp"

#include <utility>

namespace scoped {

Value hcata(const EndoAlg& alg, const Prog& p) {
  return foldLayer(
      p, alg.returnE,
      [&](OpNode<Value>&& node) { return alg.callE(node); },
      [&](const ScopeNode<Prog>& scope) {
        std::vector<Value> bodies;
        bodies.reserve(scope.bodies.size());
        for (const Prog& b : scope.bodies) {
          Prog inner = fmap(b, [&](const Value& boxed) {
            return hcata(alg, bodyLeaf(boxed));
          });
          bodies.push_back(hcata(alg, inner));
        }
        return alg.enterE(ScopeNode<Value>{scope.tag, scope.payload, std::move(bodies)});
      });
}

Value handle(const FunctorialAlgebra& alg, const UnaryFn& gen, const Prog& p) {
  return foldLayer(
      p, gen,
      [&](OpNode<Value>&& node) { return alg.base.callB(node); },
      [&](const ScopeNode<Prog>& scope) {
        std::vector<Value> bodies;
        bodies.reserve(scope.bodies.size());
        for (const Prog& b : scope.bodies) {
          Prog inner = fmap(b, [&](const Value& boxed) {
            return handle(alg, gen, bodyLeaf(boxed));
          });
          bodies.push_back(hcata(alg.endo, inner));
        }
        return alg.base.enterB(ScopeNode<Value>{scope.tag, scope.payload, std::move(bodies)});
      });
}

FunctorialAlgebra selfBased(const EndoAlg& alg) {
  FunctorialAlgebra out;
  out.name = alg.name;
  out.endo = alg;
  out.base.callB = alg.callE;
  out.base.enterB = alg.enterE;
  out.baseDomain = Domain{alg.carrier.name, alg.carrier.wellFormed};
  return out;
}

Value handleE(const EndoAlg& alg, const Prog& p) {
  return handle(selfBased(alg), alg.returnE, p);
}

}  // namespace scoped
