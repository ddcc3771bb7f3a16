#pragma once

#include <stdexcept>
#include <string>

namespace spintor {

// Malformed inputs: bad signatures, grade mismatches, unsupported constructions.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation left the admissible domain (log of a non-positive value,
// division by ~0, singular metric at a sample point, unsatisfiable box).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition or postcondition failed.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data fails a shape an equation forces (e.g. dn with a v^n component).
struct InconsistencyError : std::runtime_error {
  explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text that does not parse. Carries the byte offset and the expected-token set.
struct ParseError : std::runtime_error {
  size_t offset;
  std::string expected;
  ParseError(const std::string& msg, size_t off, std::string exp)
      : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

}  // namespace spintor
