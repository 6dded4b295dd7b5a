#include "scoped/serialize.hpp"

#include "json_detail.hpp"
#include "scoped/errors.hpp"

namespace scoped {

namespace detail {

nlohmann::ordered_json valueToJson(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      return nullptr;
    case Value::Kind::Bool:
      return v.asBool();
    case Value::Kind::Int:
      return v.asInt();
    case Value::Kind::List: {
      auto arr = nlohmann::ordered_json::array();
      for (const Value& x : v.elements()) arr.push_back(detail::valueToJson(x));
      return arr;
    }
    case Value::Kind::Record: {
      nlohmann::ordered_json rec;
      rec["tag"] = v.tag();
      auto fields = nlohmann::ordered_json::array();
      for (const Value& x : v.fields()) fields.push_back(detail::valueToJson(x));
      rec["fields"] = std::move(fields);
      return rec;
    }
    case Value::Kind::Program:
      return detail::progToJson(v.prog());
  }
  return nullptr;
}

Value valueFromJson(const nlohmann::json& j) {
  if (j.is_null()) return Value::unit();
  if (j.is_boolean()) return Value::boolean(j.get<bool>());
  if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<Value> xs;
    xs.reserve(j.size());
    for (const auto& x : j) xs.push_back(detail::valueFromJson(x));
    return Value::list(std::move(xs));
  }
  if (j.is_object()) {
    if (j.contains("kind")) return Value::program(detail::progFromJson(j));
    if (j.contains("tag") && j.contains("fields") && j["tag"].is_string() &&
        j["fields"].is_array()) {
      std::vector<Value> fields;
      for (const auto& f : j["fields"]) fields.push_back(detail::valueFromJson(f));
      return Value::record(j["tag"].get<std::string>(), std::move(fields));
    }
    throw ConfigError("object is neither a record nor a program: " + j.dump());
  }
  throw ConfigError("unsupported JSON value: " + j.dump());
}

nlohmann::ordered_json progToJson(const Prog& p) {
  const ProgNode& n = p.node();
  nlohmann::ordered_json out;
  switch (n.kind) {
    case ProgNode::Kind::Return:
      out["kind"] = "return";
      out["value"] = detail::valueToJson(n.value);
      return out;
    case ProgNode::Kind::Call:
    case ProgNode::Kind::Enter: {
      out["kind"] = n.kind == ProgNode::Kind::Call ? "call" : "enter";
      out["tag"] = n.tag;
      out["payload"] = detail::valueToJson(n.payload);
      auto kids = nlohmann::ordered_json::array();
      for (const Prog& c : n.children) kids.push_back(detail::progToJson(c));
      out["kids"] = std::move(kids);
      return out;
    }
  }
  return out;
}

Prog progFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("program node must be an object with a \"kind\": " + j.dump());
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "return") {
    if (!j.contains("value")) throw ConfigError("return node is missing \"value\"");
    return ret(detail::valueFromJson(j["value"]));
  }
  if (kind != "call" && kind != "enter")
    throw ConfigError("unknown node kind \"" + kind + "\"");
  if (!j.contains("tag") || !j["tag"].is_string())
    throw ConfigError(kind + " node is missing a string \"tag\"");
  if (!j.contains("kids") || !j["kids"].is_array())
    throw ConfigError(kind + " node is missing a \"kids\" array");
  Value payload = j.contains("payload") ? detail::valueFromJson(j["payload"]) : Value::unit();
  std::vector<Prog> kids;
  kids.reserve(j["kids"].size());
  for (const auto& c : j["kids"]) kids.push_back(detail::progFromJson(c));
  const std::string tag = j["tag"].get<std::string>();
  return kind == "call" ? call(tag, std::move(payload), std::move(kids))
                        : enter(tag, std::move(payload), std::move(kids));
}

}  // namespace detail

std::string toJson(const Prog& p, int indent) {
  return detail::progToJson(p).dump(indent);
}

Prog fromJson(const Signature& sig, const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  Prog p = detail::progFromJson(parsed);
  validate(sig, p);
  return p;
}

std::string valueToJson(const Value& v, int indent) {
  return detail::valueToJson(v).dump(indent);
}

Value valueFromJson(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return detail::valueFromJson(parsed);
}

}  // namespace scoped
