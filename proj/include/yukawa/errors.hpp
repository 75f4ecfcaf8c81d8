#pragma once

#include <stdexcept>
#include <string>

namespace yukawa {

/// Bad physical input (nonpositive mass, negative screening, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The coupling is too strong for the requested l: the centrifugal-like
/// index would be imaginary and no analytic bound state exists.
struct supercritical_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A trial energy landed outside the branch where both radicals of the
/// energy equation are real.  Bracketing scans catch and skip these.
struct branch_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Template constants would require the square root of a negative number.
struct unphysical_template_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Derived Jacobi parameters fall outside the classical range (> -1).
struct invalid_jacobi_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Wavefunction factor exponents are not strictly positive.
struct non_normalizable_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// No sign change found in an energy scan window.
struct no_bound_state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace yukawa
