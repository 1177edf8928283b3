#pragma once

#include <stdexcept>
#include <string>

namespace a4 {

/// A geometric construction produced data violating its own contract
/// (wrong minimal-vector count, non-basic cone, ...).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed during a computation.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (monomial syntax, unknown table name, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a4
