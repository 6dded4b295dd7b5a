#pragma once

#include <functional>
#include <string>

#include "scoped/prog.hpp"
#include "scoped/value.hpp"

namespace scoped {

/// A value tagged with the level of the indexed carrier family it lives in.
struct Leveled {
  int level;
  Value value;
};

/// An algebra on a level-indexed family A_0, A_1, ...: action folds an
/// operation at one level, demote brings a scope's bodies down one level,
/// promote lifts a value up one level. levelOk, when set, is checked on
/// every value an hfold run produces; a failure raises LevelViolation.
struct IxAlg {
  std::string name;
  std::function<Value(int, const OpNode<Value>&)> action;
  std::function<Value(int, const ScopeNode<Value>&)> demote;
  std::function<Value(int, const Value&)> promote;
  std::function<bool(int, const Value&)> levelOk;
};

/// Folds a program at the given level: leaves are used as-is, Call goes
/// through action, and each Enter body is folded one level up after its
/// continuations are folded here and promoted, then demoted back.
Leveled hfold(const IxAlg& alg, int level, const Prog& p);

/// Hand-written indexed algebra for nondeterminism with Once: level n is
/// (n+1)-nested lists; Fail is empty, Or concatenates, entering Once keeps
/// the first element of the level above, promotion is the singleton.
const IxAlg& onceIx();

}  // namespace scoped
