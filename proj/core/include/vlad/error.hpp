#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace vlad {

struct SourceLoc {
  int line = 0;
  int column = 0;
  bool valid() const { return line > 0; }
  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

enum class ErrorKind {
  // parsing / desugaring
  UnbalancedParens,
  UnknownForm,
  ArityMismatch,
  MalformedBinding,
  // evaluation
  UnboundVariable,
  TypeError,
  DomainError,
  // AD
  ShapeMismatch,
  NotABundle,
  ClosureInCotangentPosition,
  // checkpointing
  ComputationCompletedBeforeLimit,
  // should-not-happen conditions (broken internal invariants)
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourceLoc loc = {})
      : std::runtime_error(format(kind, message, loc)),
        kind_(kind),
        loc_(loc),
        message_(std::move(message)) {}

  ErrorKind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

  // Step count at failure, set by the CPS machine when an error escapes a run.
  std::optional<long long> steps_at_failure;

 private:
  static std::string format(ErrorKind kind, const std::string& msg, SourceLoc loc) {
    std::string s = error_kind_name(kind);
    if (loc.valid()) s += " at " + loc.to_string();
    s += ": " + msg;
    return s;
  }

  ErrorKind kind_;
  SourceLoc loc_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, SourceLoc loc = {}) {
  throw Error(kind, msg, loc);
}

}  // namespace vlad
