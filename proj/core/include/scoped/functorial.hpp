#pragma once

#include <functional>
#include <string>

#include "scoped/prog.hpp"
#include "scoped/value.hpp"

namespace scoped {

using UnaryFn = std::function<Value(const Value&)>;

/// A named functor of value shapes: how to map a function over every element
/// slot of a carrier value, and a shape test for the outer layer.
struct Carrier {
  std::string name;
  std::function<Value(const Value&, const UnaryFn&)> map;
  std::function<bool(const Value&)> wellFormed;
};

/// The endofunctor part of a functorial algebra. returnE embeds an element,
/// callE folds an operation whose children are already carrier values, and
/// enterE folds a scope whose bodies are doubled carrier values F(F x).
struct EndoAlg {
  std::string name;
  Carrier carrier;
  UnaryFn returnE;
  std::function<Value(const OpNode<Value>&)> callE;
  std::function<Value(const ScopeNode<Value>&)> enterE;
};

/// The base part: callB folds an operation over base values, enterB folds a
/// scope whose bodies are carrier values over the base, F b.
struct BaseAlg {
  std::function<Value(const OpNode<Value>&)> callB;
  std::function<Value(const ScopeNode<Value>&)> enterB;
};

struct Domain {
  std::string name;
  std::function<bool(const Value&)> contains;
};

struct FunctorialAlgebra {
  std::string name;
  EndoAlg endo;
  BaseAlg base;
  Domain baseDomain;
};

/// Folds a program into the endo carrier: Return through returnE, Call
/// through callE over folded children, Enter through enterE after folding
/// each body twice (once per layer).
Value hcata(const EndoAlg& alg, const Prog& p);

/// Full handler: leaves through gen, Call through callB, Enter bodies folded
/// with hcata after interpreting their inner continuations.
Value handle(const FunctorialAlgebra& alg, const UnaryFn& gen, const Prog& p);

/// handle specialized to the endo algebra itself: base clauses are the endo
/// clauses at the element domain and gen is returnE.
Value handleE(const EndoAlg& alg, const Prog& p);

/// Widens an endo algebra to a FunctorialAlgebra whose base is the endo at
/// the element domain (the shape handleE interprets with).
FunctorialAlgebra selfBased(const EndoAlg& alg);

}  // namespace scoped
