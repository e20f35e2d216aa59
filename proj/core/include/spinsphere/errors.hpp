#pragma once

#include <stdexcept>
#include <string>

namespace spinsphere {

// Input outside the mathematical domain of an operation (R <= 0, point on an
// excluded pole/axis set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Point on (or within tolerance of) a chart's excluded set.
class ChartDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Structurally invalid call: wrong chart for a frame, non-associated frame
// pair, mismatched shapes.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix fails a group-membership predicate.
class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerically degenerate solve (ill-separated null space).
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; the message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Component matrix is not plus or minus its canonical form.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinsphere
