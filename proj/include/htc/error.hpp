#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace htc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input (wrong shapes, different bases, unknown labels).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// The input is well formed but violates a law the operation checks
/// (group axioms, cocycle law, simplicial map condition, ...).
/// `witness()` names the offending vertices, indices or elements.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

/// An exhaustive search hit its configured step budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// Exact integer arithmetic left the 64-bit range.
class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : Error(what) {}
};

/// Upper bound on the number of elementary steps an exhaustive search may take.
struct SearchBudget {
  std::uint64_t limit = 50'000'000;
};

/// Counts steps against a SearchBudget; throws BudgetExceeded when it runs out.
class BudgetMeter {
 public:
  BudgetMeter(SearchBudget budget, std::string task) : limit_(budget.limit), task_(std::move(task)) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw BudgetExceeded(task_ + ": search budget of " + std::to_string(limit_) + " steps exceeded");
    }
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string task_;
};

}  // namespace htc
