#pragma once

#include <stdexcept>
#include <string>

namespace ziglab {

// Bad arguments: malformed fraction strings, out-of-range values,
// violated preconditions.  The CLI maps these to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside an operation's mathematical domain
// (e.g. a point with no preimage, an empty search space).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A theorem the code relies on failed at runtime.  Never expected to fire;
// if it does, the failure is a finding, not a user mistake.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ziglab
