#pragma once

#include <stdexcept>
#include <string>

namespace tetralab {

/// Bad arguments or unsupported sizes.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A combinatorial statement that must hold by construction did not
/// (cycle in a flow graph, census mismatch, inconsistent binding).
/// The message carries the witness.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tetralab
