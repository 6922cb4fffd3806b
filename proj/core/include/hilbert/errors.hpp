#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

struct HilbertError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series expansion needs nonnegative exponents in numerator and denominator.
struct NegativeExponent : HilbertError {
  using HilbertError::HilbertError;
};

// A denominator factor (1 - m) became (1 - 1) under substitution.
struct DegenerateSubstitution : HilbertError {
  using HilbertError::HilbertError;
};

// A truncated series computation found nonzero terms past its safe bound.
struct BoundViolation : HilbertError {
  using HilbertError::HilbertError;
};

// Negative power of a zero argument.
struct ZeroArgument : HilbertError {
  using HilbertError::HilbertError;
};

// A closed-form formula was called outside its hypotheses.
struct HypothesisViolation : HilbertError {
  using HilbertError::HilbertError;
};

struct ReconstructionFailure : HilbertError {
  using HilbertError::HilbertError;
};

}  // namespace hilbert
