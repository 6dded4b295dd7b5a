#pragma once

#include <functional>
#include <string>

#include "scoped/functorial.hpp"
#include "scoped/prog.hpp"

namespace scoped {

/// An algebra on a plain carrier set: callEM folds an operation over carrier
/// values, enterEM folds a scope whose bodies are still programs, with the
/// continuations at their leaves already interpreted. Reaching under that
/// remaining program layer is what lets a single carrier handle scopes.
struct EMAlg {
  std::string name;
  std::function<Value(const OpNode<Value>&)> callEM;
  std::function<Value(const ScopeNode<Prog>&)> enterEM;
};

/// Handler for EM algebras: leaves through gen, Call over interpreted
/// children, Enter with only the inner layer of each body interpreted.
Value handleEM(const EMAlg& alg, const UnaryFn& gen, const Prog& p);

/// Hand-written EM algebra for nondeterminism with Once on the list carrier.
/// Entering Once interprets the body recursively with a singleton generator
/// and keeps the first outcome's results, if any.
const EMAlg& onceAlgEM();

}  // namespace scoped
