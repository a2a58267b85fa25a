#pragma once

#include <stdexcept>
#include <string>

namespace torprod {

// Base class for every error the library raises deliberately.  The CLI maps
// HypothesisViolation to exit code 2 and everything else to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data fails a structural precondition (not a theorem hypothesis).
struct InputError : Error {
    using Error::Error;
};

struct NotSimple : InputError {
    using InputError::InputError;
};
struct Disconnected : InputError {
    using InputError::InputError;
};
struct DuplicateVertex : InputError {
    using InputError::InputError;
};
struct DegenerateFunctional : InputError {
    using InputError::InputError;
};
struct DimensionMismatch : InputError {
    using InputError::InputError;
};
struct InvalidCharFunction : InputError {
    using InputError::InputError;
};
struct WrongRing : InputError {
    using InputError::InputError;
};
struct PresentationMismatch : InputError {
    using InputError::InputError;
};
struct BadP : InputError {
    using InputError::InputError;
};
struct EmptyBase : InputError {
    using InputError::InputError;
};

// A theorem was asked to apply outside its stated hypotheses.  The message
// always names the specific failed inequality or condition.
struct HypothesisViolation : Error {
    using Error::Error;
};

// "Cannot happen" conditions whose violation would falsify an invariant the
// rest of the code relies on (torsion in a toric ring, a boundary map whose
// square is nonzero, ...).  These abort the computation with diagnostics.
struct InvariantFailure : Error {
    using Error::Error;
};

struct BoundaryNotSquareZero : InvariantFailure {
    using InvariantFailure::InvariantFailure;
};
struct ToricTorsion : InvariantFailure {
    using InvariantFailure::InvariantFailure;
};
struct NoMonomialBasis : InvariantFailure {
    using InvariantFailure::InvariantFailure;
};

}  // namespace torprod
