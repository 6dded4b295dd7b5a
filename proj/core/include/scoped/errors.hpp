#pragma once

#include <stdexcept>
#include <string>

namespace scoped {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation tag, payload, or child count that does not fit the signature,
/// or a malformed tree (e.g. a scope body whose leaf is not a program).
struct SignatureViolation : Error {
  explicit SignatureViolation(const std::string& what) : Error(what) {}
};

/// An algebra was asked to interpret a tag it has no clause for. Operations
/// are never forwarded past a handler.
struct UnhandledOperation : Error {
  explicit UnhandledOperation(const std::string& what) : Error(what) {}
};

/// An indexed-algebra value failed its level check, or a level went negative.
struct LevelViolation : Error {
  explicit LevelViolation(const std::string& what) : Error(what) {}
};

/// Bad harness configuration: unknown effect or suite name, out-of-range
/// generator settings, unparsable input.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace scoped
