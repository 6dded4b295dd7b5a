#include "scoped/signature.hpp"

#include <unordered_set>

#include "scoped/errors.hpp"

namespace scoped {

Signature::Signature(std::string name, std::vector<AlgOp> ops, std::vector<ScopeOp> scopes)
    : name_(std::move(name)), ops_(std::move(ops)), scopes_(std::move(scopes)) {
  std::unordered_set<std::string> seen;
  for (const AlgOp& o : ops_) {
    if (!seen.insert(o.tag).second)
      throw SignatureViolation("duplicate operation tag '" + o.tag + "' in signature " + name_);
  }
  seen.clear();
  for (const ScopeOp& s : scopes_) {
    if (!seen.insert(s.tag).second)
      throw SignatureViolation("duplicate scope tag '" + s.tag + "' in signature " + name_);
  }
}

const AlgOp* Signature::findOp(std::string_view tag) const {
  for (const AlgOp& o : ops_)
    if (o.tag == tag) return &o;
  return nullptr;
}

const ScopeOp* Signature::findScope(std::string_view tag) const {
  for (const ScopeOp& s : scopes_)
    if (s.tag == tag) return &s;
  return nullptr;
}

const AlgOp& Signature::opOrThrow(std::string_view tag) const {
  const AlgOp* o = findOp(tag);
  if (!o)
    throw SignatureViolation("signature " + name_ + " has no operation '" + std::string(tag) + "'");
  return *o;
}

const ScopeOp& Signature::scopeOrThrow(std::string_view tag) const {
  const ScopeOp* s = findScope(tag);
  if (!s)
    throw SignatureViolation("signature " + name_ + " has no scope '" + std::string(tag) + "'");
  return *s;
}

bool Signature::admitsPayload(const std::vector<Value>& payloads, const Value& v) {
  for (const Value& p : payloads)
    if (p == v) return true;
  return false;
}

}  // namespace scoped
