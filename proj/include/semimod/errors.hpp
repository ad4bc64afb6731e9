#pragma once

#include <stdexcept>
#include <string>

namespace semimod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested structure exceeds a configured size cap.
class SizeError : public Error {
public:
    using Error::Error;
};

// A table fails an axiom, or an argument fails a stated precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Operands live over different rings, monoids or modules.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Analysis of the zero module (or zero ring) was requested.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// The monoid does not satisfy the cancellative / torsion-free hypothesis.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Something the theory guarantees did not happen: an implementation bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace semimod
