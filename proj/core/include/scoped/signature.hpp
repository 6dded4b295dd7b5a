#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "scoped/value.hpp"

namespace scoped {

/// An algebraic operation: a tag, the finite set of admissible payloads, and
/// the number of continuation children as a function of the payload. The
/// children materialize the continuation, one child per possible outcome, so
/// arities stay finite (Get has one child per state value).
struct AlgOp {
  std::string tag;
  std::vector<Value> payloads;
  std::function<int(const Value&)> arity;
};

/// A scoped operation: tag, admissible payloads, and how many delimited
/// bodies it takes (Catch takes two: the guarded program and the recovery).
struct ScopeOp {
  std::string tag;
  std::vector<Value> payloads;
  std::function<int(const Value&)> scopeCount;
};

/// The effect signature a program is built over. Tags are unique within the
/// algebraic set and within the scoped set; declaration order is kept stable
/// so that generation and serialization are deterministic.
class Signature {
 public:
  Signature() = default;
  Signature(std::string name, std::vector<AlgOp> ops, std::vector<ScopeOp> scopes);

  const std::string& name() const { return name_; }
  const std::vector<AlgOp>& ops() const { return ops_; }
  const std::vector<ScopeOp>& scopes() const { return scopes_; }

  const AlgOp* findOp(std::string_view tag) const;
  const ScopeOp* findScope(std::string_view tag) const;
  const AlgOp& opOrThrow(std::string_view tag) const;
  const ScopeOp& scopeOrThrow(std::string_view tag) const;

  static bool admitsPayload(const std::vector<Value>& payloads, const Value& v);

 private:
  std::string name_;
  std::vector<AlgOp> ops_;
  std::vector<ScopeOp> scopes_;
};

}  // namespace scoped
