#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewlines {

enum class ErrorKind {
  ZeroDirection,
  CoplanarPair,
  ParallelVectors,
  NotSymmetric,
  BadMultiIndex,
  OutOfDomain,
  TooLarge,
  UnknownName,
  NoConvergence,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `pair` carries the offending 1-based
// vertex/line indices for CoplanarPair and ParallelVectors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::pair<int, int>> pair = std::nullopt)
      : std::runtime_error(what), kind_(kind), pair_(pair) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<std::pair<int, int>>& pair() const { return pair_; }

 private:
  ErrorKind kind_;
  std::optional<std::pair<int, int>> pair_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_residual, int starts)
      : Error(ErrorKind::NoConvergence, what),
        best_residual_(best_residual),
        starts_(starts) {}

  double best_residual() const { return best_residual_; }
  int starts() const { return starts_; }

 private:
  double best_residual_;
  int starts_;
};

}  // namespace skewlines
