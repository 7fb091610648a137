#ifndef FUSIONFORGE_ERRORS_HPP
#define FUSIONFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fusionforge {

// Base class for all diagnostics raised by the library. Messages name the
// failing quantity and the offending indices so callers can report them
// verbatim.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (bad schema, missing unit, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// A coefficient that must be a nonnegative integer missed the rounding
// tolerance. Usually means the supplied S-matrix or structure constants do
// not belong to a spherical category.
struct NotIntegral : Error {
    using Error::Error;
};

// Idempotent extraction found the wrong number of minimal idempotents.
struct NotSemisimple : Error {
    using Error::Error;
};

// Step 5 of the recovery algorithm could not find a unique dual partner.
struct NoDual : Error {
    using Error::Error;
};

// Perron-Frobenius eigensolve failed to converge within the iteration budget.
struct NonConvergence : Error {
    using Error::Error;
};

struct UnknownCategory : Error {
    using Error::Error;
};

// Quadratic form on a metric group is degenerate.
struct DegenerateForm : Error {
    using Error::Error;
};

// Candidate subgroup fails the Lagrangian invariants.
struct NotLagrangian : Error {
    using Error::Error;
};

// A provider-emitted algebra spec disagrees with its own closed form.
struct SelfConsistency : Error {
    using Error::Error;
};

// The genus exponent in the cyclic permutation formula came out odd.
struct ParityViolation : Error {
    using Error::Error;
};

} // namespace fusionforge

#endif
