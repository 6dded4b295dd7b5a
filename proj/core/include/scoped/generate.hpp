#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scoped/prog.hpp"
#include "scoped/value.hpp"

namespace scoped {

/// Corpus settings. Identical configs produce identical corpora, on any
/// platform; no global state is involved.
struct GenConfig {
  std::string signature;          // a registry effect name
  int maxDepth = 4;               // layers of Call/Enter nesting
  int maxWidth = 8;               // ops needing more continuations are skipped
  std::vector<Value> leafDomain;  // empty means the effect's default domain
  std::uint64_t seed = 1;
  int corpusSize = 300;
  int maxNodes = 192;             // node budget per program, boxes included
};

/// Deterministic 64-bit generator (splitmix64). Standard-library engines are
/// avoided so corpora are reproducible across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform-enough draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Generates a deterministic, signature-valid corpus for a registry effect.
/// Beyond the random programs, the corpus is topped up with witnesses so that
/// every op and scope tag within the width limit occurs, and, when maxDepth
/// allows, so does a scope nested inside a scope body. A zero maxDepth yields
/// plain Return programs only. Throws ConfigError on bad settings or an
/// unknown effect name.
std::vector<Prog> genPrograms(const GenConfig& cfg);

/// Greedy structural shrinking: while pred stays true, repeatedly collapses
/// subtrees to Return leaves built from leaf0, promotes Call children, and
/// promotes the continuation out of a scope. pred must hold for p itself.
Prog shrinkProgram(const Prog& p, const std::function<bool(const Prog&)>& pred,
                   const Value& leaf0);

}  // namespace scoped
