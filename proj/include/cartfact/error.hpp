#pragma once

#include <stdexcept>
#include <string>

namespace cartfact {

enum class ErrorKind {
  kParse,
  kOutOfRange,
  kDuplicate,
  kDisconnected,
  kNoUnloopedVertex,
  kInvalidColoring,
  kMismatch,
  kBoundExceeded,
  kInvalidArgument,
};

/// Error raised by every module of the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace cartfact
