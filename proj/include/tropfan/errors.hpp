#pragma once

#include <stdexcept>
#include <string>

namespace tropfan {

// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well formed but violates a documented precondition (exit code 3).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// An internal consistency check failed (exit code 4).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tropfan
