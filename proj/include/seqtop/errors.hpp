#pragma once
#include <stdexcept>
#include <string>

namespace seqtop {

// Input data exceeds a hard structural cap (ground size, table size, ...).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold for this input.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed serialized input: the message carries a path to the offending field.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace seqtop
