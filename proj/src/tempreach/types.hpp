#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tempreach {

using Time = std::int64_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sentinel for "no temporal path exists". Compares greater than every finite time.
inline constexpr Time kUnreachable = std::numeric_limits<Time>::max();

inline bool is_reachable(Time t) { return t != kUnreachable; }

enum class ErrorCode {
  kInvalidGraph,
  kUnknownVertex,
  kInvalidSchedule,
  kInvalidInstance,
  kParse,
  kNotATree,
  kNotParallelPaths,
  kSourcesNotEndpoints,
  kWiWjNotAdjacent,
  kInvalidArgument,
  kNodeLimitExceeded,
  kInvalidSetSystem,
  kInvalidFormula,
  kNotNaeSatisfying,
  kInvalidParams,
};

/// Every failure raised by the core carries a code so the C layer can map it
/// onto a status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tempreach
