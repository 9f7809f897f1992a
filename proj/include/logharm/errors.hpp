#pragma once

#include <stdexcept>
#include <string>

namespace logharm {

/// Thrown when an argument violates an operation's precondition
/// (point outside the guarded disk, a(0) != 0, weights that do not sum to 1, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative numerical procedure exhausts its budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logharm
