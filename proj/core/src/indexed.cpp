#include "scoped/indexed.hpp"

#include <utility>

#include "scoped/errors.hpp"

namespace scoped {

namespace {

Value checked(const IxAlg& alg, int level, Value v, const char* producedBy) {
  if (level < 0) throw LevelViolation(std::string(producedBy) + " produced a negative level");
  if (alg.levelOk && !alg.levelOk(level, v))
    throw LevelViolation(std::string(producedBy) + " of algebra " + alg.name +
                         " broke the level discipline at level " + std::to_string(level) +
                         ": " + v.str());
  return v;
}

Value hfoldValue(const IxAlg& alg, int level, const Prog& p) {
  return foldLayer(
      p,
      [&](const Value& leaf) { return checked(alg, level, leaf, "leaf"); },
      [&](OpNode<Value>&& node) {
        return checked(alg, level, alg.action(level, node), "action");
      },
      [&](const ScopeNode<Prog>& scope) {
        std::vector<Value> bodies;
        bodies.reserve(scope.bodies.size());
        for (const Prog& b : scope.bodies) {
          Prog lifted = fmap(b, [&](const Value& boxed) {
            Value here = hfoldValue(alg, level, bodyLeaf(boxed));
            return checked(alg, level + 1, alg.promote(level, here), "promote");
          });
          bodies.push_back(hfoldValue(alg, level + 1, lifted));
        }
        Value down = alg.demote(level, ScopeNode<Value>{scope.tag, scope.payload, std::move(bodies)});
        return checked(alg, level, std::move(down), "demote");
      });
}

bool nestedList(const Value& v, int depth) {
  if (depth <= 0) return true;
  if (!v.isList()) return false;
  for (const Value& x : v.elements())
    if (!nestedList(x, depth - 1)) return false;
  return true;
}

IxAlg makeOnceIx() {
  IxAlg alg;
  alg.name = "onceIx";
  alg.action = [](int, const OpNode<Value>& node) -> Value {
    if (node.tag == "Fail") return Value::list({});
    if (node.tag == "Or") return Value::concatLists(node.kids[0], node.kids[1]);
    throw UnhandledOperation("onceIx has no clause for operation '" + node.tag + "'");
  };
  alg.demote = [](int, const ScopeNode<Value>& scope) -> Value {
    if (scope.tag != "Once")
      throw UnhandledOperation("onceIx has no clause for scope '" + scope.tag + "'");
    const auto& xs = scope.bodies[0].elements();
    return xs.empty() ? Value::list({}) : xs.front();
  };
  alg.promote = [](int, const Value& v) { return Value::list({v}); };
  alg.levelOk = [](int level, const Value& v) { return nestedList(v, level + 1); };
  return alg;
}

}  // namespace

Leveled hfold(const IxAlg& alg, int level, const Prog& p) {
  if (level < 0) throw LevelViolation("hfold called at a negative level");
  return Leveled{level, hfoldValue(alg, level, p)};
}

const IxAlg& onceIx() {
  static const IxAlg alg = makeOnceIx();
  return alg;
}

}  // namespace scoped
