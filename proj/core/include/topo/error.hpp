#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topo {

enum class ErrorKind {
  DuplicateVertexInSimplex,
  EmptySimplex,
  UnknownBuiltin,
  ApexCollision,
  NotASubcomplex,
  Disconnected,
  NotPrime,
  InternalMismatch,
  InvalidMap,
  BadCover,
  DegreeMismatch,
  NotPseudomanifold,
  NotOrientable,
  DimensionMismatch,
  BadEmbedding,
  NotSelfMap,
  IndexOutOfRange,
  RangeError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All engine failures are reported through this one exception type; `kind()`
// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace topo
