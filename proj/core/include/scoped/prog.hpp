#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "scoped/signature.hpp"
#include "scoped/value.hpp"

namespace scoped {

/// One node of a program tree.
///
/// A program is either a finished computation (Return), an algebraic
/// operation whose children are the materialized continuations (Call), or a
/// scoped operation whose bodies are two-layer programs: each body's leaves
/// hold the continuation program of the whole scope, boxed as values
/// (Value::program). bind grafts onto Call children directly but only onto
/// that inner layer of Enter bodies, which is exactly what keeps scopes
/// delimited.
struct ProgNode {
  enum class Kind { Return, Call, Enter };

  Kind kind;
  Value value;                 // Return only
  std::string tag;             // Call / Enter
  Value payload;               // Call / Enter
  std::vector<Prog> children;  // Call continuations / Enter bodies
};

/// Tagged node views handed to algebras. C is Value once children are
/// interpreted, or Prog where an algebra receives raw bodies.
template <typename C>
struct OpNode {
  std::string tag;
  Value payload;
  std::vector<C> kids;
};

template <typename C>
struct ScopeNode {
  std::string tag;
  Value payload;
  std::vector<C> bodies;
};

/// A finished computation.
Prog ret(Value v);

/// Structural constructors. They build exactly the node given, with no
/// signature in play; op/sc below are the checked entry points.
Prog call(std::string tag, Value payload, std::vector<Prog> kids);
Prog enter(std::string tag, Value payload, std::vector<Prog> bodies);

/// Checked constructor for an algebraic operation: the tag must exist, the
/// payload must be admissible, and exactly arity(payload) continuations must
/// be supplied. Throws SignatureViolation otherwise.
Prog op(const Signature& sig, const std::string& tag, const Value& payload,
        std::vector<Prog> kids);

/// Checked constructor for a scoped operation. The given bodies are plain
/// programs; each is lifted to the two-layer form by wrapping its leaves as
/// returned continuation programs.
Prog sc(const Signature& sig, const std::string& tag, const Value& payload,
        std::vector<Prog> bodies);

/// Monadic bind: grafts k onto every leaf. Crosses Call children freely but
/// only the inner layer of Enter bodies. Iterative along each layer, so
/// chains 10^4 deep are fine; native recursion is spent only on scope
/// nesting.
Prog bind(const Prog& p, const std::function<Prog(const Value&)>& k);

/// Functorial map over the leaves; equal to bind(p, a -> ret(f(a))).
Prog fmap(const Prog& p, const std::function<Value(const Value&)>& f);

/// Structural equality of trees, including boxed programs inside values.
bool equal(const Prog& a, const Prog& b);

/// Checks a whole tree against a signature: tags, payloads, arities, scope
/// counts, and that every leaf of a scope body boxes a program. Throws
/// SignatureViolation with the offending path.
void validate(const Signature& sig, const Prog& p);

std::size_t nodeCount(const Prog& p);

/// Short one-line rendering, used in diagnostics.
std::string describe(const Prog& p);

/// Interprets one layer of a program iteratively: leaves through leaf, Call
/// nodes through onCall once their children are interpreted, Enter nodes
/// handed over raw (their bodies are where each interpreter differs).
Value foldLayer(const Prog& p,
                const std::function<Value(const Value&)>& leaf,
                const std::function<Value(OpNode<Value>&&)>& onCall,
                const std::function<Value(const ScopeNode<Prog>&)>& onEnter);

/// The leaf of a scope body, which must box the continuation program.
const Prog& bodyLeaf(const Value& v);

}  // namespace scoped
