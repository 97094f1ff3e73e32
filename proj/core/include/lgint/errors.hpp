#pragma once

#include <stdexcept>
#include <string>

namespace lgint {

/// A computed enumerative quantity (structure constant, Gromov-Witten
/// invariant, degree) came out non-integral or negative, or two integration
/// routes disagreed. Always indicates a transcription bug, never bad input.
class IntegralityError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Quantum products whose expansion would need degree >= 2 invariants.
class UnsupportedDegreeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lgint
