#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"
#include "scoped/generate.hpp"
#include "scoped/signature.hpp"

using namespace scoped;

namespace {

void collectTags(const Prog& p, std::set<std::string>& ops,
                 std::set<std::string>& scopes) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      if (n.value.isProgram()) collectTags(n.value.prog(), ops, scopes);
      return;
    case ProgNode::Kind::Call:
      ops.insert(n.tag);
      break;
    case ProgNode::Kind::Enter:
      scopes.insert(n.tag);
      break;
  }
  for (const Prog& c : n.children) collectTags(c, ops, scopes);
}

bool hasNestedScope(const Prog& p, bool insideScope) {
  const ProgNode& n = p.node();
  if (n.kind == ProgNode::Kind::Return)
    return n.value.isProgram() && hasNestedScope(n.value.prog(), insideScope);
  const bool nowInside = insideScope || n.kind == ProgNode::Kind::Enter;
  if (insideScope && n.kind == ProgNode::Kind::Enter) return true;
  for (const Prog& c : n.children)
    if (hasNestedScope(c, nowInside)) return true;
  return false;
}

GenConfig configFor(const std::string& effect, std::uint64_t seed = 11) {
  GenConfig cfg;
  cfg.signature = effect;
  cfg.maxDepth = 3;
  cfg.seed = seed;
  cfg.corpusSize = 60;
  return cfg;
}

}  // namespace

TEST_CASE("the splitmix64 stream matches the published sequence") {
  Rng r(0);
  CHECK(r.next() == 0xe220a8397b1dcdafULL);
  CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(r.next() == 0x06c45d188009454fULL);
  Rng s(10);
  for (int i = 0; i < 100; ++i) CHECK(s.below(7) < 7);
}

TEST_CASE("identical configs produce identical corpora") {
  for (const Effect& e : effectRegistry()) {
    CAPTURE(e.name);
    const std::vector<Prog> a = genPrograms(configFor(e.name));
    const std::vector<Prog> b = genPrograms(configFor(e.name));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(equal(a[i], b[i]));
  }
  const std::vector<Prog> a = genPrograms(configFor("nondet", 11));
  const std::vector<Prog> c = genPrograms(configFor("nondet", 12));
  bool anyDifference = a.size() != c.size();
  for (std::size_t i = 0; !anyDifference && i < a.size(); ++i)
    anyDifference = !equal(a[i], c[i]);
  CHECK(anyDifference);
}

TEST_CASE("every corpus program is valid for its signature") {
  for (const Effect& e : effectRegistry()) {
    CAPTURE(e.name);
    for (const Prog& p : genPrograms(configFor(e.name)))
      CHECK_NOTHROW(validate(e.signature, p));
  }
}

TEST_CASE("a corpus covers every operation and scope of its signature") {
  for (const Effect& e : effectRegistry()) {
    CAPTURE(e.name);
    std::set<std::string> ops;
    std::set<std::string> scopes;
    for (const Prog& p : genPrograms(configFor(e.name))) collectTags(p, ops, scopes);
    for (const AlgOp& op : e.signature.ops()) CHECK(ops.count(op.tag) == 1);
    for (const ScopeOp& scope : e.signature.scopes())
      CHECK(scopes.count(scope.tag) == 1);
  }
}

TEST_CASE("a deep corpus exercises scopes nested in scope bodies") {
  bool nested = false;
  for (const Prog& p : genPrograms(configFor("nondet")))
    nested = nested || hasNestedScope(p, false);
  CHECK(nested);
}

TEST_CASE("depth zero yields plain returns") {
  GenConfig cfg = configFor("state");
  cfg.maxDepth = 0;
  for (const Prog& p : genPrograms(cfg)) {
    CHECK(p.node().kind == ProgNode::Kind::Return);
    CHECK(nodeCount(p) == 1);
  }
}

TEST_CASE("the node budget keeps programs bounded") {
  GenConfig cfg = configFor("state");
  cfg.maxDepth = 6;
  cfg.maxNodes = 24;
  // The budget is a soft cap: siblings begun before it runs out still finish
  // as leaf chains, so the hard bound adds one chain per pending frame.
  const int slack = cfg.maxDepth * cfg.maxWidth * (cfg.maxDepth + 2);
  for (const Prog& p : genPrograms(cfg)) CHECK(nodeCount(p) <= cfg.maxNodes + slack);
}

TEST_CASE("a leaf domain override reaches every plain leaf") {
  GenConfig cfg = configFor("nondet");
  cfg.leafDomain = {intV(7)};
  std::function<void(const Prog&)> walk = [&](const Prog& p) {
    const ProgNode& n = p.node();
    if (n.kind == ProgNode::Kind::Return) {
      if (n.value.isProgram())
        walk(n.value.prog());
      else
        CHECK(n.value == intV(7));
      return;
    }
    for (const Prog& c : p.node().children) walk(c);
  };
  for (const Prog& p : genPrograms(cfg)) walk(p);
}

TEST_CASE("the width limit filters wide operations out entirely") {
  GenConfig cfg = configFor("state");
  cfg.maxWidth = 4;
  std::set<std::string> ops;
  std::set<std::string> scopes;
  for (const Prog& p : genPrograms(cfg)) collectTags(p, ops, scopes);
  CHECK(ops.count("Get") == 0);
  CHECK(ops.count("Put") == 1);
  CHECK(scopes.count("Local") == 1);
}

TEST_CASE("bad generator settings are rejected") {
  CHECK_THROWS_AS(genPrograms(configFor("tensor")), ConfigError);
  GenConfig cfg = configFor("nondet");
  cfg.maxDepth = -1;
  CHECK_THROWS_AS(genPrograms(cfg), ConfigError);
  cfg = configFor("nondet");
  cfg.corpusSize = 0;
  CHECK_THROWS_AS(genPrograms(cfg), ConfigError);
  cfg = configFor("nondet");
  cfg.maxNodes = 0;
  CHECK_THROWS_AS(genPrograms(cfg), ConfigError);
  cfg = configFor("nondet");
  cfg.maxWidth = 0;
  CHECK_THROWS_AS(genPrograms(cfg), ConfigError);
}

TEST_CASE("shrinking keeps the predicate and reaches a small witness") {
  const Signature& sig = nondetSig();
  const Prog p = orP(sig, orP(sig, ret(intV(1)), ret(intV(2))), ret(intV(3)));
  const auto hasOr = [](const Prog& q) {
    std::set<std::string> ops;
    std::set<std::string> scopes;
    collectTags(q, ops, scopes);
    return ops.count("Or") == 1;
  };
  const Prog shrunk = shrinkProgram(p, hasOr, intV(0));
  CHECK(hasOr(shrunk));
  CHECK(nodeCount(shrunk) == 3);
  CHECK_NOTHROW(validate(sig, shrunk));
}
