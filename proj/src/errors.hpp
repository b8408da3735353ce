#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freesep {

// Word text could not be parsed; `position` is the 0-based offending character.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
  BudgetError(std::string msg, std::uint64_t budget_)
      : std::runtime_error(std::move(msg)), budget(budget_) {}
  std::uint64_t budget;
};

}  // namespace freesep
