#pragma once

#include "scoped/prog.hpp"
#include "scoped/value.hpp"

namespace scoped {

/// Reference interpreters written as direct recursions over program trees,
/// independent of the algebra machinery. Each returns a value of the same
/// shape as the corresponding handler so results compare with ==. They are
/// meant for corpus-sized programs; only the handlers are chain-hardened.

/// Maybe of the final value; a failed Catch body falls through to recovery.
Value oracleExceptions(const Prog& p);

/// Variant without recovery: a failed body aborts the Catch.
Value oracleExceptionsAbort(const Prog& p);

/// List of results by branch enumeration; Once keeps its first branch,
/// resolved innermost-first.
Value oracleNondet(const Prog& p);

/// Number of results, as an integer value.
Value oracleNondetCount(const Prog& p);

/// Whether there are no results, as a boolean value.
Value oracleNondetIsEmpty(const Prog& p);

/// What Once would produce if it were algebraic, i.e. if continuations were
/// in scope: at most one result survives, the first of the fully flattened
/// enumeration.
Value oracleNondetAlgebraicOnce(const Prog& p);

/// State table over {0..domainSize-1}: entry s is the pair (final state,
/// value) of an environment-passing run from s. Local runs its body under
/// the payload state and resumes under the state saved at entry.
Value oracleState(const Prog& p, int domainSize);

/// Depth-first result list with scope-local reordering: BFS bodies yield
/// their outcomes stably ordered by Or-depth, DBS(d) bodies only those at
/// Or-depth at most d. Entering a scope consumes no depth.
Value oracleStrategy(const Prog& p, int depthBound);

/// Table over {0..domainSize-1} of pairs (final state, Maybe value).
Value oracleExcState(const Prog& p, int domainSize);

}  // namespace scoped
