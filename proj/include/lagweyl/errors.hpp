#pragma once

#include <stdexcept>
#include <string>

namespace lagweyl {

// Error taxonomy; the CLI maps these onto exit codes (input 2, invariant 4,
// degeneracy 5).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed group spec, element out of range, violated
// operation precondition.
struct InputError : Error {
  using Error::Error;
};

// Internal consistency failure: something that must hold by construction did
// not. Always a bug signal.
struct InvariantError : Error {
  using Error::Error;
};

// Numerical degeneracy after exhausting retries.
struct DegeneracyError : Error {
  using Error::Error;
};

// A family of matrices does not satisfy the projective relation with any
// scalar table.
struct RepInconsistencyError : Error {
  using Error::Error;
};

// Intertwiner solution space is zero-dimensional; signals a multiplier
// mismatch between the two representations.
struct InequivalentRepsError : Error {
  using Error::Error;
};

}  // namespace lagweyl
