#include "cartfact/error.hpp"

namespace cartfact {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kOutOfRange: return "id out of range";
    case ErrorKind::kDuplicate: return "duplicate";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kNoUnloopedVertex: return "no unlooped vertex";
    case ErrorKind::kInvalidColoring: return "invalid coloring";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kBoundExceeded: return "size bound exceeded";
    case ErrorKind::kInvalidArgument: return "invalid argument";
  }
  return "unknown";
}

}  // namespace cartfact
