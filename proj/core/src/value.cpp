#include "scoped/value.hpp"

#include <sstream>

#include "scoped/errors.hpp"

namespace scoped {

namespace {

[[noreturn]] void kindError(const char* want, const Value& got) {
  throw Error(std::string("value is not ") + want + ": " + got.str());
}

}  // namespace

bool Value::asBool() const {
  if (!isBool()) kindError("a boolean", *this);
  return std::get<bool>(v_);
}

std::int64_t Value::asInt() const {
  if (!isInt()) kindError("an integer", *this);
  return std::get<std::int64_t>(v_);
}

const std::vector<Value>& Value::elements() const {
  if (!isList()) kindError("a list", *this);
  return *std::get<std::shared_ptr<std::vector<Value>>>(v_);
}

const std::string& Value::tag() const {
  if (!isRecord()) kindError("a record", *this);
  return std::get<std::shared_ptr<Rec>>(v_)->tag;
}

const std::vector<Value>& Value::fields() const {
  if (!isRecord()) kindError("a record", *this);
  return std::get<std::shared_ptr<Rec>>(v_)->fields;
}

const Prog& Value::prog() const {
  if (!isProgram()) kindError("a program", *this);
  return std::get<Prog>(v_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Unit:
      return true;
    case Value::Kind::Bool:
      return std::get<bool>(a.v_) == std::get<bool>(b.v_);
    case Value::Kind::Int:
      return std::get<std::int64_t>(a.v_) == std::get<std::int64_t>(b.v_);
    case Value::Kind::List: {
      const auto& xs = a.elements();
      const auto& ys = b.elements();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == ys[i])) return false;
      return true;
    }
    case Value::Kind::Record: {
      if (a.tag() != b.tag()) return false;
      const auto& xs = a.fields();
      const auto& ys = b.fields();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == ys[i])) return false;
      return true;
    }
    case Value::Kind::Program:
      return equal(a.prog(), b.prog());
  }
  return false;
}

namespace {

bool needsParens(const Value& v) {
  return v.isRecord() && !v.fields().empty() && v.tag() != "pair";
}

void render(const Value& v, std::ostream& out) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      out << "()";
      return;
    case Value::Kind::Bool:
      out << (v.asBool() ? "true" : "false");
      return;
    case Value::Kind::Int:
      out << v.asInt();
      return;
    case Value::Kind::List: {
      out << '[';
      bool first = true;
      for (const Value& x : v.elements()) {
        if (!first) out << ',';
        first = false;
        render(x, out);
      }
      out << ']';
      return;
    }
    case Value::Kind::Record: {
      const auto& fields = v.fields();
      if (v.tag() == "pair" && fields.size() == 2) {
        out << '(';
        render(fields[0], out);
        out << ", ";
        render(fields[1], out);
        out << ')';
        return;
      }
      out << v.tag();
      for (const Value& f : fields) {
        out << ' ';
        if (needsParens(f)) {
          out << '(';
          render(f, out);
          out << ')';
        } else {
          render(f, out);
        }
      }
      return;
    }
    case Value::Kind::Program:
      out << describe(v.prog());
      return;
  }
}

}  // namespace

std::string Value::str() const {
  std::ostringstream out;
  render(*this, out);
  return out.str();
}

Value Value::concatLists(Value left, const Value& right) {
  if (!left.isList() || !right.isList()) {
    throw Error("concatLists expects two lists, got " + left.str() + " and " + right.str());
  }
  auto& buf = std::get<std::shared_ptr<std::vector<Value>>>(left.v_);
  const auto& rhs = right.elements();
  if (buf.use_count() == 1) {
    buf->insert(buf->end(), rhs.begin(), rhs.end());
    return left;
  }
  std::vector<Value> joined;
  joined.reserve(buf->size() + rhs.size());
  joined.insert(joined.end(), buf->begin(), buf->end());
  joined.insert(joined.end(), rhs.begin(), rhs.end());
  return Value::list(std::move(joined));
}

std::vector<Value> intRange(std::int64_t lo, std::int64_t hi) {
  std::vector<Value> out;
  for (std::int64_t i = lo; i < hi; ++i) out.push_back(Value::integer(i));
  return out;
}

}  // namespace scoped
