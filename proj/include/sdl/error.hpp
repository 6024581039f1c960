#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdl {

/// How a failure should be surfaced to a caller (the CLI maps these to exit codes).
enum class ErrorKind {
  Input,         // malformed data: bad shapes, indices out of range, schema errors
  Size,          // a construction would exceed the configured size bound
  Precondition,  // the operation is not defined for this instance
  Axiom,         // the data is well formed but violates a required law
};

/// A universally quantified law that failed, with the first counterexample tuple.
struct Witness {
  std::string rule;
  std::vector<int> args;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code, const std::string& message) {
  throw Error(kind, std::move(code), message);
}

}  // namespace sdl
