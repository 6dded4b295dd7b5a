#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace scoped {

struct ProgNode;

/// Immutable, cheaply copyable handle to a program tree node. The node type
/// and all program operations live in prog.hpp; the handle itself is declared
/// here because values can carry programs (the leaves of a scope body are the
/// continuation programs of that scope).
class Prog {
 public:
  explicit Prog(std::shared_ptr<const ProgNode> node) : node_(std::move(node)) {}

  const ProgNode& node() const { return *node_; }
  const std::shared_ptr<const ProgNode>& ptr() const { return node_; }

 private:
  std::shared_ptr<const ProgNode> node_;
};

bool equal(const Prog& a, const Prog& b);
std::string describe(const Prog& p);

/// The single runtime universe all programs and carriers live in: unit,
/// booleans, integers, finite sequences, tagged records, and boxed programs.
/// Values are immutable and have decidable structural equality.
class Value {
 public:
  enum class Kind { Unit, Bool, Int, List, Record, Program };

  Value() : v_(std::monostate{}) {}

  static Value unit() { return Value(); }
  static Value boolean(bool b) { return Value(Repr(b)); }
  static Value integer(std::int64_t n) { return Value(Repr(n)); }
  static Value list(std::vector<Value> xs) {
    return Value(Repr(std::make_shared<std::vector<Value>>(std::move(xs))));
  }
  static Value record(std::string tag, std::vector<Value> fields) {
    return Value(Repr(std::make_shared<Rec>(Rec{std::move(tag), std::move(fields)})));
  }
  static Value program(Prog p) { return Value(Repr(std::move(p))); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool isUnit() const { return kind() == Kind::Unit; }
  bool isBool() const { return kind() == Kind::Bool; }
  bool isInt() const { return kind() == Kind::Int; }
  bool isList() const { return kind() == Kind::List; }
  bool isRecord() const { return kind() == Kind::Record; }
  bool isProgram() const { return kind() == Kind::Program; }

  bool asBool() const;
  std::int64_t asInt() const;
  const std::vector<Value>& elements() const;
  const std::string& tag() const;
  const std::vector<Value>& fields() const;
  const Prog& prog() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  /// Human-readable rendering: 43, true, (), [1,2], Just 43, (3, 3).
  std::string str() const;

  /// List concatenation that reuses the left buffer when it is uniquely
  /// owned, so left-leaning concatenation chains stay linear.
  static Value concatLists(Value left, const Value& right);

 private:
  struct Rec {
    std::string tag;
    std::vector<Value> fields;
  };
  using Repr = std::variant<std::monostate, bool, std::int64_t,
                            std::shared_ptr<std::vector<Value>>,
                            std::shared_ptr<Rec>, Prog>;

  explicit Value(Repr v) : v_(std::move(v)) {}

  Repr v_;
};

inline Value intV(std::int64_t n) { return Value::integer(n); }

std::vector<Value> intRange(std::int64_t lo, std::int64_t hi);

}  // namespace scoped
