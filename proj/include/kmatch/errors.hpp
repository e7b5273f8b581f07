#pragma once

#include <stdexcept>
#include <string>

namespace kmatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// A matrix has a nonzero entry at a cell that is not an edge of the graph.
struct SupportOutsideGraph : Error {
  int i;
  int j;
  SupportOutsideGraph(int row, int col)
      : Error("support outside graph at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        i(row),
        j(col) {}
};

struct AlreadyIntegral : Error {
  AlreadyIntegral() : Error("point is integral; no midpoint certificate exists") {}
};

struct PreconditionViolated : Error {
  std::string condition;
  explicit PreconditionViolated(std::string cond)
      : Error("precondition violated: " + cond), condition(std::move(cond)) {}
};

struct TooLarge : Error {
  using Error::Error;
};

struct NoKMatching : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Raised when a proof-backed invariant fails at runtime. Reaching this
/// indicates a bug, never a user error.
struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool condition, const char* what) {
  if (!condition) throw InternalError(std::string("internal invariant failed: ") + what);
}

}  // namespace kmatch
