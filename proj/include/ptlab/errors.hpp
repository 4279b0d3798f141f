#pragma once

#include <stdexcept>
#include <string>

namespace ptlab {

// Index or argument outside the mathematical domain of an operation.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Caller broke a precondition (mismatched sizes, crossing input, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The Weingarten system has no inverse for the requested (n, N).
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A hard budget (table ceiling, index-sum size, sample count) was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word / spec / pattern text. `position` is a 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at column " + std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ptlab
