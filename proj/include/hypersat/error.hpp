#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersat {

enum class ErrorCode {
  LinearityViolation,
  DuplicateEdge,
  BadArity,
  UnknownVertex,
  NoPartition,
  PartitionViolation,
  EmptyGraph,
  ParseError,
  SizeGuard,
  NotStronglyProper,
  BudgetInfeasible,
  DensityPrecondition,
  RetriesExhausted,
  PreconditionViolated,
  EmptyLevel,
  NoExtension,
  WorkCapExceeded,
};

std::string_view to_string(ErrorCode code);

// Base of every domain error raised by the library. `item` is the index of
// the offending input element (edge, line, ...) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> item = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> item() const noexcept { return item_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> item_;
};

class LinearityViolation : public Error {
 public:
  LinearityViolation(unsigned u, unsigned v, std::size_t existing_edge,
                     std::size_t new_edge);

  unsigned first() const noexcept { return u_; }
  unsigned second() const noexcept { return v_; }
  std::size_t existing_edge() const noexcept { return existing_; }

 private:
  unsigned u_;
  unsigned v_;
  std::size_t existing_;
};

class NotStronglyProper : public Error {
 public:
  NotStronglyProper(std::size_t edge_a, std::size_t edge_b, unsigned shared);

  std::size_t edge_a() const noexcept { return a_; }
  std::size_t edge_b() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

class RetriesExhausted : public Error {
 public:
  RetriesExhausted(unsigned vertex, std::size_t part, std::size_t size,
                   double floor, std::size_t attempts);

  unsigned vertex() const noexcept { return vertex_; }
  std::size_t part() const noexcept { return part_; }
  std::size_t size() const noexcept { return size_; }
  double floor() const noexcept { return floor_; }

 private:
  unsigned vertex_;
  std::size_t part_;
  std::size_t size_;
  double floor_;
};

}  // namespace hypersat
