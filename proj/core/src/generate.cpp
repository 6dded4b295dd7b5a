#include "scoped/generate.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"
#include "scoped/signature.hpp"

namespace scoped {

std::uint64_t Rng::next() {
  // splitmix64 (public domain), the usual seed-expansion recurrence.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

namespace {

struct GenContext {
  const Signature& sig;
  const std::vector<Value>& leaves;
  Rng& rng;
  std::vector<std::size_t> usableOps;  // ops whose worst arity fits maxWidth
};

int worstArity(const AlgOp& op) {
  int worst = 0;
  for (const Value& payload : op.payloads)
    worst = std::max(worst, op.arity(payload));
  return worst;
}

Value randomLeaf(GenContext& ctx) {
  return ctx.leaves[static_cast<std::size_t>(ctx.rng.below(ctx.leaves.size()))];
}

Prog genLayer(GenContext& ctx, int depth, int boxDepth, int& budget);

/// A leaf value at the given box depth: boxDepth layers of boxed return
/// programs around a domain value, with occasional real continuation
/// programs in place of the innermost plain return.
Value genLeafValue(GenContext& ctx, int depth, int boxDepth, int& budget) {
  if (boxDepth == 0) return randomLeaf(ctx);
  const int continuationDepth =
      (budget > 4 && depth > 0 && ctx.rng.below(2) == 0) ? std::min(depth, 2) : 0;
  return Value::program(genLayer(ctx, continuationDepth, boxDepth - 1, budget));
}

Prog genLayer(GenContext& ctx, int depth, int boxDepth, int& budget) {
  budget -= 1;
  if (depth <= 0 || budget <= 0)
    return ret(genLeafValue(ctx, 0, boxDepth, budget));

  const bool scopesUsable = !ctx.sig.scopes().empty();
  const bool opsUsable = !ctx.usableOps.empty();
  std::uint64_t roll = ctx.rng.below(100);
  if (!opsUsable && !scopesUsable) roll = 0;
  if (roll < 35 || (roll < 75 && !opsUsable) || (roll >= 75 && !scopesUsable))
    return ret(genLeafValue(ctx, depth, boxDepth, budget));

  if (roll < 75) {
    const AlgOp& op = ctx.sig.ops()[ctx.usableOps[static_cast<std::size_t>(
        ctx.rng.below(ctx.usableOps.size()))]];
    const Value& payload =
        op.payloads[static_cast<std::size_t>(ctx.rng.below(op.payloads.size()))];
    const int arity = op.arity(payload);
    std::vector<Prog> kids;
    kids.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
      kids.push_back(genLayer(ctx, depth - 1, boxDepth, budget));
    return call(op.tag, payload, std::move(kids));
  }

  const ScopeOp& scope = ctx.sig.scopes()[static_cast<std::size_t>(
      ctx.rng.below(ctx.sig.scopes().size()))];
  const Value& payload =
      scope.payloads[static_cast<std::size_t>(ctx.rng.below(scope.payloads.size()))];
  const int count = scope.scopeCount(payload);
  std::vector<Prog> bodies;
  bodies.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    bodies.push_back(genLayer(ctx, depth - 1, boxDepth + 1, budget));
  return enter(scope.tag, payload, std::move(bodies));
}

bool containsTag(const Prog& p, const std::string& tag, bool scopeTag) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      return n.value.isProgram() && containsTag(n.value.prog(), tag, scopeTag);
    case ProgNode::Kind::Call:
    case ProgNode::Kind::Enter: {
      const bool isScope = n.kind == ProgNode::Kind::Enter;
      if (isScope == scopeTag && n.tag == tag) return true;
      for (const Prog& c : n.children)
        if (containsTag(c, tag, scopeTag)) return true;
      return false;
    }
  }
  return false;
}

bool containsTagAnywhere(const std::vector<Prog>& corpus, const std::string& tag,
                         bool scopeTag) {
  for (const Prog& p : corpus)
    if (containsTag(p, tag, scopeTag)) return true;
  return false;
}

bool containsNestedScope(const Prog& p, bool insideScope) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      return n.value.isProgram() && containsNestedScope(n.value.prog(), insideScope);
    case ProgNode::Kind::Call:
      for (const Prog& c : n.children)
        if (containsNestedScope(c, insideScope)) return true;
      return false;
    case ProgNode::Kind::Enter:
      if (insideScope) return true;
      for (const Prog& body : n.children)
        if (containsNestedScope(body, true)) return true;
      return false;
  }
  return false;
}

void validateConfig(const GenConfig& cfg) {
  if (cfg.maxDepth < 0)
    throw ConfigError("generator depth must be nonnegative, got " +
                      std::to_string(cfg.maxDepth));
  if (cfg.maxWidth < 1)
    throw ConfigError("generator width must be positive, got " +
                      std::to_string(cfg.maxWidth));
  if (cfg.corpusSize < 1)
    throw ConfigError("corpus size must be positive, got " +
                      std::to_string(cfg.corpusSize));
  if (cfg.maxNodes < 1)
    throw ConfigError("node budget must be positive, got " +
                      std::to_string(cfg.maxNodes));
}

}  // namespace

std::vector<Prog> genPrograms(const GenConfig& cfg) {
  validateConfig(cfg);
  const Effect& effect = findEffect(cfg.signature);
  const Signature& sig = effect.signature;
  const std::vector<Value>& leaves =
      cfg.leafDomain.empty() ? effect.leafDomain : cfg.leafDomain;
  if (leaves.empty()) throw ConfigError("leaf domain is empty");

  Rng rng(cfg.seed);
  GenContext ctx{sig, leaves, rng, {}};
  for (std::size_t i = 0; i < sig.ops().size(); ++i)
    if (worstArity(sig.ops()[i]) <= cfg.maxWidth) ctx.usableOps.push_back(i);

  std::vector<Prog> corpus;
  corpus.reserve(static_cast<std::size_t>(cfg.corpusSize));
  for (int i = 0; i < cfg.corpusSize; ++i) {
    int budget = cfg.maxNodes;
    corpus.push_back(genLayer(ctx, cfg.maxDepth, 0, budget));
  }

  if (cfg.maxDepth < 1) return corpus;

  // Top up whatever the random draw missed: every usable op tag, every scope
  // tag, and (depth permitting) one scope nested in a scope body.
  const Value leaf0 = leaves.front();
  for (std::size_t i : ctx.usableOps) {
    const AlgOp& op = sig.ops()[i];
    if (containsTagAnywhere(corpus, op.tag, false)) continue;
    const Value& payload = op.payloads.front();
    std::vector<Prog> kids(static_cast<std::size_t>(op.arity(payload)), ret(leaf0));
    corpus.push_back(call(op.tag, payload, std::move(kids)));
  }
  for (const ScopeOp& scope : sig.scopes()) {
    if (containsTagAnywhere(corpus, scope.tag, true)) continue;
    const Value& payload = scope.payloads.front();
    std::vector<Prog> bodies(static_cast<std::size_t>(scope.scopeCount(payload)),
                             ret(leaf0));
    corpus.push_back(sc(sig, scope.tag, payload, std::move(bodies)));
  }
  if (cfg.maxDepth >= 2 && !sig.scopes().empty()) {
    bool nested = false;
    for (const Prog& p : corpus)
      if (containsNestedScope(p, false)) {
        nested = true;
        break;
      }
    if (!nested) {
      const ScopeOp& scope = sig.scopes().front();
      const Value& payload = scope.payloads.front();
      const int count = scope.scopeCount(payload);
      std::vector<Prog> inner(static_cast<std::size_t>(count), ret(leaf0));
      Prog innerScope = sc(sig, scope.tag, payload, std::move(inner));
      std::vector<Prog> outer(static_cast<std::size_t>(count), innerScope);
      corpus.push_back(sc(sig, scope.tag, payload, std::move(outer)));
    }
  }
  return corpus;
}

namespace {

Value wrappedLeaf(const Value& leaf0, int boxDepth) {
  Value v = leaf0;
  for (int i = 0; i < boxDepth; ++i) v = Value::program(ret(v));
  return v;
}

/// A continuation reachable from a scope body without crossing into another
/// layer: the boxed program at the first leaf found under Call nodes only.
const Prog* firstContinuation(const Prog& body) {
  const ProgNode& n = body.node();
  if (n.kind == ProgNode::Kind::Return)
    return n.value.isProgram() ? &n.value.prog() : nullptr;
  if (n.kind == ProgNode::Kind::Call) {
    for (const Prog& c : n.children)
      if (const Prog* k = firstContinuation(c)) return k;
  }
  return nullptr;
}

/// Single-step shrink candidates of p at the given box depth, most
/// aggressive first.
void collectVariants(const Prog& p, int boxDepth, const Value& leaf0,
                     std::vector<Prog>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  const ProgNode& n = p.node();
  if (n.kind == ProgNode::Kind::Return) {
    if (boxDepth > 0 && n.value.isProgram()) {
      std::vector<Prog> inner;
      collectVariants(n.value.prog(), boxDepth - 1, leaf0, inner, cap - out.size());
      for (const Prog& q : inner) out.push_back(ret(Value::program(q)));
    }
    return;
  }

  out.push_back(ret(wrappedLeaf(leaf0, boxDepth)));

  if (n.kind == ProgNode::Kind::Call) {
    for (const Prog& c : n.children) out.push_back(c);
    for (std::size_t i = 0; i < n.children.size() && out.size() < cap; ++i) {
      std::vector<Prog> inner;
      collectVariants(n.children[i], boxDepth, leaf0, inner, cap - out.size());
      for (const Prog& q : inner) {
        std::vector<Prog> kids = n.children;
        kids[i] = q;
        out.push_back(call(n.tag, n.payload, std::move(kids)));
      }
    }
    return;
  }

  for (const Prog& body : n.children)
    if (const Prog* k = firstContinuation(body)) out.push_back(*k);
  for (std::size_t i = 0; i < n.children.size() && out.size() < cap; ++i) {
    std::vector<Prog> inner;
    collectVariants(n.children[i], boxDepth + 1, leaf0, inner, cap - out.size());
    for (const Prog& q : inner) {
      std::vector<Prog> bodies = n.children;
      bodies[i] = q;
      out.push_back(enter(n.tag, n.payload, std::move(bodies)));
    }
  }
}

}  // namespace

Prog shrinkProgram(const Prog& p, const std::function<bool(const Prog&)>& pred,
                   const Value& leaf0) {
  Prog current = p;
  int checksLeft = 400;
  bool improved = true;
  while (improved && checksLeft > 0) {
    improved = false;
    std::vector<Prog> candidates;
    collectVariants(current, 0, leaf0, candidates, 160);
    const std::size_t size = nodeCount(current);
    for (const Prog& candidate : candidates) {
      if (nodeCount(candidate) >= size) continue;
      if (--checksLeft < 0) break;
      if (pred(candidate)) {
        current = candidate;
        improved = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace scoped
