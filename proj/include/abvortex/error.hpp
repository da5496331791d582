#pragma once

#include <stdexcept>
#include <string>

namespace abvortex {

enum class ErrorKind {
  InvalidInput,
  NonpositiveEnergy,
  InvalidExtension,
  WrongChannel,
  NoRoot,
  ForwardSingularity,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind lets
/// callers (the CLI in particular) map failures onto exit codes and per-row
/// status strings without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace abvortex
