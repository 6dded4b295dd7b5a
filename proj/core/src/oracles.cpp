#include "scoped/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"

namespace scoped {

namespace {

[[noreturn]] void unexpected(const char* oracle, const ProgNode& n) {
  const char* what = n.kind == ProgNode::Kind::Call ? " operation " : " scope ";
  throw UnhandledOperation(std::string("the ") + oracle +
                           " oracle has no clause for" + what + n.tag);
}

std::optional<Value> runExc(const Prog& p, bool recover) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      return n.value;
    case ProgNode::Kind::Call:
      if (n.tag == "Throw") return std::nullopt;
      unexpected("exceptions", n);
    case ProgNode::Kind::Enter: {
      if (n.tag != "Catch") unexpected("exceptions", n);
      if (auto guarded = runExc(n.children[0], recover))
        return runExc(bodyLeaf(*guarded), recover);
      if (!recover) return std::nullopt;
      if (auto rec = runExc(n.children[1], recover))
        return runExc(bodyLeaf(*rec), recover);
      return std::nullopt;
    }
  }
  unexpected("exceptions", n);
}

/// Branch enumeration with Once delimited: the body's own branching is
/// resolved first, then only its first branch continues.
void scopedBranches(const Prog& p, std::vector<Value>& out) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      out.push_back(n.value);
      return;
    case ProgNode::Kind::Call:
      if (n.tag == "Fail") return;
      if (n.tag == "Or") {
        scopedBranches(n.children[0], out);
        scopedBranches(n.children[1], out);
        return;
      }
      unexpected("nondeterminism", n);
    case ProgNode::Kind::Enter: {
      if (n.tag != "Once") unexpected("nondeterminism", n);
      std::vector<Value> inner;
      scopedBranches(n.children[0], inner);
      if (inner.empty()) return;
      scopedBranches(bodyLeaf(inner.front()), out);
      return;
    }
  }
}

/// Branch enumeration as if Once were algebraic: the continuation is pulled
/// inside the scope, everything is flattened, and one result survives.
void algebraicBranches(const Prog& p, std::vector<Value>& out) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      out.push_back(n.value);
      return;
    case ProgNode::Kind::Call:
      if (n.tag == "Fail") return;
      if (n.tag == "Or") {
        algebraicBranches(n.children[0], out);
        algebraicBranches(n.children[1], out);
        return;
      }
      unexpected("nondeterminism", n);
    case ProgNode::Kind::Enter: {
      if (n.tag != "Once") unexpected("nondeterminism", n);
      std::vector<Value> boxes;
      algebraicBranches(n.children[0], boxes);
      std::vector<Value> flat;
      for (const Value& box : boxes) algebraicBranches(bodyLeaf(box), flat);
      if (!flat.empty()) out.push_back(flat.front());
      return;
    }
  }
}

struct StateRun {
  std::int64_t state;
  Value value;
};

StateRun runSt(const Prog& p, std::int64_t s) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      return {s, n.value};
    case ProgNode::Kind::Call:
      if (n.tag == "Put") return runSt(n.children[0], n.payload.asInt());
      if (n.tag == "Get")
        return runSt(n.children[static_cast<std::size_t>(s)], s);
      unexpected("state", n);
    case ProgNode::Kind::Enter: {
      if (n.tag != "Local") unexpected("state", n);
      StateRun body = runSt(n.children[0], n.payload.asInt());
      return runSt(bodyLeaf(body.value), s);
    }
  }
  unexpected("state", n);
}

struct ExcStateRun {
  std::int64_t state;
  std::optional<Value> value;
};

ExcStateRun runExcSt(const Prog& p, std::int64_t s) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      return {s, n.value};
    case ProgNode::Kind::Call:
      if (n.tag == "Throw") return {s, std::nullopt};
      if (n.tag == "Put") return runExcSt(n.children[0], n.payload.asInt());
      if (n.tag == "Get")
        return runExcSt(n.children[static_cast<std::size_t>(s)], s);
      unexpected("exceptions-over-state", n);
    case ProgNode::Kind::Enter: {
      if (n.tag != "Catch") unexpected("exceptions-over-state", n);
      ExcStateRun guarded = runExcSt(n.children[0], s);
      if (guarded.value)
        return runExcSt(bodyLeaf(*guarded.value), guarded.state);
      ExcStateRun rec = runExcSt(n.children[1], guarded.state);
      if (rec.value) return runExcSt(bodyLeaf(*rec.value), rec.state);
      return {rec.state, std::nullopt};
    }
  }
  unexpected("exceptions-over-state", n);
}

struct DepthLeaf {
  Value value;
  int depth;
};

/// Depth-first enumeration of (leaf, Or-depth) pairs. A scope reorders or
/// filters its body's branches by the body-local depth, then splices each
/// surviving continuation at the scope's own depth; entering consumes none.
void searchLeaves(const Prog& p, int depth, std::vector<DepthLeaf>& out) {
  const ProgNode& n = p.node();
  switch (n.kind) {
    case ProgNode::Kind::Return:
      out.push_back({n.value, depth});
      return;
    case ProgNode::Kind::Call:
      if (n.tag == "Fail") return;
      if (n.tag == "Or") {
        searchLeaves(n.children[0], depth + 1, out);
        searchLeaves(n.children[1], depth + 1, out);
        return;
      }
      unexpected("search", n);
    case ProgNode::Kind::Enter: {
      std::vector<DepthLeaf> inner;
      searchLeaves(n.children[0], 0, inner);
      std::vector<DepthLeaf> picked;
      if (n.tag == "DFS") {
        picked = std::move(inner);
      } else if (n.tag == "BFS") {
        picked = std::move(inner);
        std::stable_sort(picked.begin(), picked.end(),
                         [](const DepthLeaf& a, const DepthLeaf& b) {
                           return a.depth < b.depth;
                         });
      } else if (n.tag == "DBS") {
        const std::int64_t budget = n.payload.asInt();
        for (DepthLeaf& leaf : inner)
          if (leaf.depth <= budget) picked.push_back(std::move(leaf));
      } else {
        unexpected("search", n);
      }
      for (const DepthLeaf& leaf : picked)
        searchLeaves(bodyLeaf(leaf.value), depth, out);
      return;
    }
  }
}

}  // namespace

Value oracleExceptions(const Prog& p) {
  auto r = runExc(p, true);
  return r ? just(*r) : nothing();
}

Value oracleExceptionsAbort(const Prog& p) {
  auto r = runExc(p, false);
  return r ? just(*r) : nothing();
}

Value oracleNondet(const Prog& p) {
  std::vector<Value> out;
  scopedBranches(p, out);
  return Value::list(std::move(out));
}

Value oracleNondetCount(const Prog& p) {
  std::vector<Value> out;
  scopedBranches(p, out);
  return intV(static_cast<std::int64_t>(out.size()));
}

Value oracleNondetIsEmpty(const Prog& p) {
  std::vector<Value> out;
  scopedBranches(p, out);
  return Value::boolean(out.empty());
}

Value oracleNondetAlgebraicOnce(const Prog& p) {
  std::vector<Value> out;
  algebraicBranches(p, out);
  return Value::list(std::move(out));
}

Value oracleState(const Prog& p, int domainSize) {
  std::vector<Value> entries;
  entries.reserve(static_cast<std::size_t>(domainSize));
  for (int s = 0; s < domainSize; ++s) {
    StateRun r = runSt(p, s);
    entries.push_back(pairOf(intV(r.state), r.value));
  }
  return Value::list(std::move(entries));
}

Value oracleStrategy(const Prog& p, int) {
  std::vector<DepthLeaf> out;
  searchLeaves(p, 0, out);
  std::vector<Value> results;
  results.reserve(out.size());
  for (DepthLeaf& leaf : out) results.push_back(std::move(leaf.value));
  return Value::list(std::move(results));
}

Value oracleExcState(const Prog& p, int domainSize) {
  std::vector<Value> entries;
  entries.reserve(static_cast<std::size_t>(domainSize));
  for (int s = 0; s < domainSize; ++s) {
    ExcStateRun r = runExcSt(p, s);
    entries.push_back(pairOf(intV(r.state), r.value ? just(*r.value) : nothing()));
  }
  return Value::list(std::move(entries));
}

}  // namespace scoped
