#pragma once

#include <json.hpp>

#include "scoped/prog.hpp"
#include "scoped/value.hpp"

namespace scoped::detail {

nlohmann::ordered_json valueToJson(const Value& v);
Value valueFromJson(const nlohmann::json& j);
nlohmann::ordered_json progToJson(const Prog& p);
Prog progFromJson(const nlohmann::json& j);

}  // namespace scoped::detail
