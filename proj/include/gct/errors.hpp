#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gct {

struct DegreeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PointOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Thrown by element enumeration when |G| exceeds the caller's limit.
struct LimitExceededError : std::runtime_error {
  LimitExceededError(std::string order_decimal, std::uint64_t limit)
      : std::runtime_error("group order " + order_decimal +
                           " exceeds enumeration limit " +
                           std::to_string(limit)),
        order(std::move(order_decimal)),
        limit(limit) {}
  std::string order;
  std::uint64_t limit;
};

// Thrown by the class-count dispatcher when no formula applies and the
// group is too large to enumerate.
struct UncountableError : std::runtime_error {
  explicit UncountableError(std::string order_decimal)
      : std::runtime_error("no counting method applies to group of order " +
                           order_decimal),
        order(std::move(order_decimal)) {}
  std::string order;
};

// Syntax error in the group-spec mini-language or a permutation literal.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace gct
