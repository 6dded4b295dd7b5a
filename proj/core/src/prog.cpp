#include "scoped/prog.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "scoped/errors.hpp"

namespace scoped {

namespace {

Prog mk(ProgNode&& n) { return Prog(std::make_shared<const ProgNode>(std::move(n))); }

}  // namespace

Prog ret(Value v) {
  ProgNode n;
  n.kind = ProgNode::Kind::Return;
  n.value = std::move(v);
  return mk(std::move(n));
}

Prog call(std::string tag, Value payload, std::vector<Prog> kids) {
  ProgNode n;
  n.kind = ProgNode::Kind::Call;
  n.tag = std::move(tag);
  n.payload = std::move(payload);
  n.children = std::move(kids);
  return mk(std::move(n));
}

Prog enter(std::string tag, Value payload, std::vector<Prog> bodies) {
  ProgNode n;
  n.kind = ProgNode::Kind::Enter;
  n.tag = std::move(tag);
  n.payload = std::move(payload);
  n.children = std::move(bodies);
  return mk(std::move(n));
}

Prog op(const Signature& sig, const std::string& tag, const Value& payload,
        std::vector<Prog> kids) {
  const AlgOp& spec = sig.opOrThrow(tag);
  if (!Signature::admitsPayload(spec.payloads, payload))
    throw SignatureViolation("operation '" + tag + "' in signature " + sig.name() +
                             " does not admit payload " + payload.str());
  const int want = spec.arity(payload);
  if (static_cast<int>(kids.size()) != want)
    throw SignatureViolation("operation '" + tag + "' expects " + std::to_string(want) +
                             " continuations, got " + std::to_string(kids.size()));
  return call(tag, payload, std::move(kids));
}

Prog sc(const Signature& sig, const std::string& tag, const Value& payload,
        std::vector<Prog> bodies) {
  const ScopeOp& spec = sig.scopeOrThrow(tag);
  if (!Signature::admitsPayload(spec.payloads, payload))
    throw SignatureViolation("scope '" + tag + "' in signature " + sig.name() +
                             " does not admit payload " + payload.str());
  const int want = spec.scopeCount(payload);
  if (static_cast<int>(bodies.size()) != want)
    throw SignatureViolation("scope '" + tag + "' expects " + std::to_string(want) +
                             " bodies, got " + std::to_string(bodies.size()));
  std::vector<Prog> lifted;
  lifted.reserve(bodies.size());
  for (const Prog& b : bodies) {
    lifted.push_back(fmap(b, [](const Value& a) { return Value::program(ret(a)); }));
  }
  return enter(tag, payload, std::move(lifted));
}

const Prog& bodyLeaf(const Value& v) {
  if (!v.isProgram())
    throw SignatureViolation("scope body leaf must box a continuation program, got " + v.str());
  return v.prog();
}

namespace {

using LeafFn = std::function<Prog(const Value&)>;

struct GraftFrame {
  Prog owner;
  std::size_t next = 0;
  std::vector<Prog> done;
  std::shared_ptr<const LeafFn> leaf;
};

/// Rebuilds one layer, grafting leaf(v) in place of every Return v. Enter
/// bodies are rebuilt in the same worklist under a leaf function that binds
/// their boxed continuations one layer down; native recursion therefore
/// tracks scope nesting, never chain length.
Prog graft(const Prog& root, const std::shared_ptr<const LeafFn>& leaf) {
  std::vector<GraftFrame> stack;
  stack.push_back(GraftFrame{root, 0, {}, leaf});
  std::optional<Prog> out;
  while (!stack.empty()) {
    GraftFrame& f = stack.back();
    const ProgNode& n = f.owner.node();
    std::optional<Prog> finished;
    if (n.kind == ProgNode::Kind::Return) {
      finished = (*f.leaf)(n.value);
    } else if (f.next < n.children.size()) {
      const Prog& child = n.children[f.next++];
      if (n.kind == ProgNode::Kind::Call) {
        stack.push_back(GraftFrame{child, 0, {}, f.leaf});
      } else {
        auto inner = f.leaf;
        auto bodyLeafFn = std::make_shared<const LeafFn>([inner](const Value& boxed) {
          return ret(Value::program(graft(bodyLeaf(boxed), inner)));
        });
        stack.push_back(GraftFrame{child, 0, {}, bodyLeafFn});
      }
      continue;
    } else if (n.kind == ProgNode::Kind::Call) {
      finished = call(n.tag, n.payload, std::move(f.done));
    } else {
      finished = enter(n.tag, n.payload, std::move(f.done));
    }
    stack.pop_back();
    if (stack.empty()) {
      out = std::move(finished);
    } else {
      stack.back().done.push_back(std::move(*finished));
    }
  }
  return std::move(*out);
}

}  // namespace

Prog bind(const Prog& p, const std::function<Prog(const Value&)>& k) {
  return graft(p, std::make_shared<const LeafFn>(k));
}

Prog fmap(const Prog& p, const std::function<Value(const Value&)>& f) {
  return graft(p, std::make_shared<const LeafFn>(
                      [f](const Value& a) { return ret(f(a)); }));
}

bool equal(const Prog& a, const Prog& b) {
  std::vector<std::pair<const ProgNode*, const ProgNode*>> todo;
  todo.emplace_back(&a.node(), &b.node());
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind) return false;
    if (x->kind == ProgNode::Kind::Return) {
      if (!(x->value == y->value)) return false;
      continue;
    }
    if (x->tag != y->tag || !(x->payload == y->payload)) return false;
    if (x->children.size() != y->children.size()) return false;
    for (std::size_t i = 0; i < x->children.size(); ++i)
      todo.emplace_back(&x->children[i].node(), &y->children[i].node());
  }
  return true;
}

void validate(const Signature& sig, const Prog& p) {
  // depth tracks how many scope-body layers enclose a node: at depth d > 0
  // every leaf must box a program, itself valid at depth d - 1.
  std::vector<std::pair<const ProgNode*, int>> todo;
  todo.emplace_back(&p.node(), 0);
  while (!todo.empty()) {
    auto [n, depth] = todo.back();
    todo.pop_back();
    switch (n->kind) {
      case ProgNode::Kind::Return:
        if (depth > 0) todo.emplace_back(&bodyLeaf(n->value).node(), depth - 1);
        break;
      case ProgNode::Kind::Call: {
        const AlgOp& spec = sig.opOrThrow(n->tag);
        if (!Signature::admitsPayload(spec.payloads, n->payload))
          throw SignatureViolation("operation '" + n->tag + "' does not admit payload " +
                                   n->payload.str());
        if (static_cast<int>(n->children.size()) != spec.arity(n->payload))
          throw SignatureViolation("operation '" + n->tag + "' has arity " +
                                   std::to_string(spec.arity(n->payload)) + ", found " +
                                   std::to_string(n->children.size()) + " children");
        for (const Prog& c : n->children) todo.emplace_back(&c.node(), depth);
        break;
      }
      case ProgNode::Kind::Enter: {
        const ScopeOp& spec = sig.scopeOrThrow(n->tag);
        if (!Signature::admitsPayload(spec.payloads, n->payload))
          throw SignatureViolation("scope '" + n->tag + "' does not admit payload " +
                                   n->payload.str());
        if (static_cast<int>(n->children.size()) != spec.scopeCount(n->payload))
          throw SignatureViolation("scope '" + n->tag + "' takes " +
                                   std::to_string(spec.scopeCount(n->payload)) +
                                   " bodies, found " + std::to_string(n->children.size()));
        for (const Prog& c : n->children) todo.emplace_back(&c.node(), depth + 1);
        break;
      }
    }
  }
}

namespace {

void pushBoxedPrograms(const Value& v, std::vector<const ProgNode*>& todo) {
  switch (v.kind()) {
    case Value::Kind::Program:
      todo.push_back(&v.prog().node());
      break;
    case Value::Kind::List:
      for (const Value& x : v.elements()) pushBoxedPrograms(x, todo);
      break;
    case Value::Kind::Record:
      for (const Value& x : v.fields()) pushBoxedPrograms(x, todo);
      break;
    default:
      break;
  }
}

}  // namespace

std::size_t nodeCount(const Prog& p) {
  std::size_t count = 0;
  std::vector<const ProgNode*> todo{&p.node()};
  while (!todo.empty()) {
    const ProgNode* n = todo.back();
    todo.pop_back();
    ++count;
    if (n->kind == ProgNode::Kind::Return) {
      pushBoxedPrograms(n->value, todo);
    } else {
      for (const Prog& c : n->children) todo.push_back(&c.node());
    }
  }
  return count;
}

namespace {

void describeOnto(const ProgNode& n, std::ostream& out, int& budget) {
  if (budget-- <= 0) {
    out << "...";
    return;
  }
  switch (n.kind) {
    case ProgNode::Kind::Return:
      out << "ret " << n.value.str();
      return;
    case ProgNode::Kind::Call:
    case ProgNode::Kind::Enter: {
      out << n.tag;
      if (!n.payload.isUnit()) out << '<' << n.payload.str() << '>';
      out << (n.kind == ProgNode::Kind::Call ? '(' : '{');
      bool first = true;
      for (const Prog& c : n.children) {
        if (!first) out << "; ";
        first = false;
        describeOnto(c.node(), out, budget);
      }
      out << (n.kind == ProgNode::Kind::Call ? ')' : '}');
      return;
    }
  }
}

}  // namespace

std::string describe(const Prog& p) {
  std::ostringstream out;
  int budget = 48;
  describeOnto(p.node(), out, budget);
  return out.str();
}

Value foldLayer(const Prog& p,
                const std::function<Value(const Value&)>& leaf,
                const std::function<Value(OpNode<Value>&&)>& onCall,
                const std::function<Value(const ScopeNode<Prog>&)>& onEnter) {
  struct Frame {
    Prog owner;
    std::size_t next = 0;
    std::vector<Value> done;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{p, 0, {}});
  std::optional<Value> out;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const ProgNode& n = f.owner.node();
    std::optional<Value> finished;
    if (n.kind == ProgNode::Kind::Return) {
      finished = leaf(n.value);
    } else if (n.kind == ProgNode::Kind::Enter) {
      finished = onEnter(ScopeNode<Prog>{n.tag, n.payload, n.children});
    } else if (f.next < n.children.size()) {
      stack.push_back(Frame{n.children[f.next++], 0, {}});
      continue;
    } else {
      finished = onCall(OpNode<Value>{n.tag, n.payload, std::move(f.done)});
    }
    stack.pop_back();
    if (stack.empty()) {
      out = std::move(finished);
    } else {
      stack.back().done.push_back(std::move(*finished));
    }
  }
  return std::move(*out);
}

}  // namespace scoped
