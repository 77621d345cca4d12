#pragma once

#include <stdexcept>
#include <string>

namespace trivar {

// Base class for everything this library throws on bad input or blown
// resource limits.  Callers that only care about "did it work" can catch
// this; the CLI maps the concrete types onto exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Datum fails validation (or an operation was handed a datum it cannot
// accept, e.g. Type 1 where Type 2 is required).
struct InvalidDatum : Error {
    using Error::Error;
};

// Division by zero / reciprocal of zero in exact arithmetic.
struct DivisionByZero : Error {
    using Error::Error;
};

// Buchberger exceeded the configured basis-size cap.
struct ResourceLimitExceeded : Error {
    using Error::Error;
};

// exp_action: some iterated derivative failed to vanish within the bound.
struct NotNilpotentWithinBound : Error {
    using Error::Error;
};

// Operation needs a surface datum (all n_i = 1, m = 0).
struct NotSurface : Error {
    using Error::Error;
};

// eliminate_linear_monomial pointed at a tuple whose exponent is not 1.
struct ExponentNotOne : Error {
    using Error::Error;
};

// Witness constructor needs a single-relation datum.
struct NotHypersurface : Error {
    using Error::Error;
};

// witness_s_variable on a datum with m = 0.
struct NoSVariables : Error {
    using Error::Error;
};

// build_suspension with a constant (or zero) f.
struct ConstantF : Error {
    using Error::Error;
};

// witness_suspension_lift: base derivation does not kill f modulo the
// base ideal, so the naive extension would not be well defined.
struct FNotInKernel : Error {
    using Error::Error;
};

// Case checker handed a datum that does not match the requested pattern.
struct WrongShape : Error {
    using Error::Error;
};

// Generic precondition failure for the residual-case tagger and friends.
struct PreconditionViolated : Error {
    using Error::Error;
};

// CLI input document is malformed (bad JSON, missing keys, bad rational
// literal).  Distinct from InvalidDatum: the document parsed fine but the
// datum it denotes is mathematically invalid.
struct ParseError : Error {
    using Error::Error;
};

} // namespace trivar
