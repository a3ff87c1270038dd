#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace renorm {

/// Malformed input: non-finite coordinates, dimension mismatch, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction rejected because a named invariant does not hold.
class ConstraintError : public std::invalid_argument {
 public:
  ConstraintError(std::string constraint, const std::string& message)
      : std::invalid_argument(constraint + ": " + message), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// An iterative solver that did not reach its target; carries the best iterate found.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& message, std::vector<double> best_iterate, double best_value)
      : std::runtime_error(message), best_iterate_(std::move(best_iterate)), best_value_(best_value) {}

  const std::vector<double>& best_iterate() const noexcept { return best_iterate_; }
  double best_value() const noexcept { return best_value_; }

 private:
  std::vector<double> best_iterate_;
  double best_value_;
};

}  // namespace renorm
