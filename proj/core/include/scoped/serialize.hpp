#pragma once

#include <string>

#include "scoped/prog.hpp"
#include "scoped/signature.hpp"
#include "scoped/value.hpp"

namespace scoped {

/// Canonical JSON form of a program:
///   {"kind":"return","value":V}
///   {"kind":"call","tag":T,"payload":V,"kids":[...]}
///   {"kind":"enter","tag":T,"payload":V,"kids":[...]}
/// Child order is significant. Values map to JSON as: unit -> null,
/// booleans and integers to themselves, lists to arrays, records to
/// {"tag":T,"fields":[...]}, boxed programs to program objects.
std::string toJson(const Prog& p, int indent = -1);

/// Parses the canonical form and validates the result against sig. Malformed
/// JSON or schema raises ConfigError; signature mismatches raise
/// SignatureViolation.
Prog fromJson(const Signature& sig, const std::string& text);

std::string valueToJson(const Value& v, int indent = -1);
Value valueFromJson(const std::string& text);

}  // namespace scoped
