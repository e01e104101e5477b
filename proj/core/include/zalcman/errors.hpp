#pragma once

#include <stdexcept>
#include <string>

namespace zalcman {

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two truncated series of different orders were combined.
class OrderMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation requested at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input violates the hypotheses of a theorem-level diagnostic.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Loewner coefficients still moving at the end of the driving horizon.
class HorizonError : public std::runtime_error {
 public:
  HorizonError(const std::string& what, double last_delta)
      : std::runtime_error(what), last_delta_(last_delta) {}
  double last_delta() const noexcept { return last_delta_; }

 private:
  double last_delta_;
};

/// Trajectory tracing lost track of the square-root branch.
class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zalcman
