#pragma once

#include "scoped/em.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"

namespace scoped {

/// The free carrier: F x is the programs over x, map is fmap on leaves.
Carrier syntaxCarrier();

/// Views an EM algebra as a functorial one: the endo carrier is the program
/// functor itself with the node constructors as clauses, the base clauses
/// are the EM clauses. handle with the result equals handleEM with the
/// source.
FunctorialAlgebra emToFunctorial(const EMAlg& alg);

/// Collapses a functorial algebra to an EM algebra on its base: callEM is
/// callB, enterEM folds each body with hcata before enterB.
EMAlg functorialToEM(const FunctorialAlgebra& alg);

/// Unrolls a functorial algebra into an indexed family with level n carrier
/// F^n X: level 0 uses the base clauses, higher levels the endo clauses, and
/// promotion is returnE at the level below.
IxAlg functorialToIndexed(const FunctorialAlgebra& alg);

/// Collapses an indexed algebra to an EM algebra on its level-0 carrier:
/// callEM is action at 0, enterEM promotes each body's leaves, folds the
/// body at level 1, and demotes.
EMAlg indexedToEM(const IxAlg& alg);

}  // namespace scoped
