#pragma once

#include <cmath>
#include <string>

#include "yukawa/errors.hpp"

namespace yukawa {

/// Two-body input parameters, fm^-1 units throughout (hbar kept symbolic).
///
/// The potential is V(r) = -V0 * exp(-a*r) / r; a = 0 is the Coulomb limit.
struct PhysicalParams {
    double m1 = 5.0;   ///< first mass (fm^-1)
    double m2 = 5.0;   ///< second mass (fm^-1)
    double V0 = 1.0;   ///< coupling strength (multiplies 1/r)
    double a = 0.01;   ///< screening parameter (fm^-1)
    double hbar = 1.0;

    void validate() const {
        if (!(m1 > 0.0) || !(m2 > 0.0))
            throw parameter_error("masses must be positive");
        if (!(V0 > 0.0))
            throw parameter_error("coupling V0 must be positive");
        if (!(a >= 0.0))
            throw parameter_error("screening parameter a must be >= 0");
        if (!(hbar > 0.0))
            throw parameter_error("hbar must be positive");
    }
};

/// Radial node count n >= 0 and orbital momentum l >= 0.
///
/// n counts radial nodes: the nodeless ground state is n = 0.  Published
/// spectra for this problem usually start their tables at n = 1.
struct QuantumNumbers {
    int n = 0;
    int l = 0;

    void validate() const {
        if (n < 0 || l < 0)
            throw parameter_error("quantum numbers must be nonnegative");
    }
};

/// Reduced mass mu, the auxiliary mass eta, and the effective mass m_tilde
/// that scales the relativistic correction term.
struct DerivedMasses {
    double mu;
    double eta;
    double m_tilde;
};

/// mu = m1 m2/(m1+m2), m_tilde = m1 m2 mu/(m1 m2 - 3 mu^2), eta = (m_tilde mu^2)^(1/3).
///
/// m1 m2 - 3 mu^2 >= m1 m2 / 4 for any positive masses, so m_tilde is
/// always finite and positive.
inline DerivedMasses derive_masses(const PhysicalParams& p) {
    p.validate();
    const double prod = p.m1 * p.m2;
    const double mu = prod / (p.m1 + p.m2);
    const double denom = prod - 3.0 * mu * mu;
    const double m_tilde = prod * mu / denom;
    const double eta = mu * std::cbrt(prod / denom);
    return {mu, eta, m_tilde};
}

/// nu = sqrt((l+1/2)^2 - mu V0^2/(hbar^2 m_tilde)): the screened analogue of
/// l + 1/2.  Throws supercritical_error when the radicand is negative; the
/// analytic solution does not exist past that point.
inline double nu_parameter(int l, const PhysicalParams& p, const DerivedMasses& dm) {
    if (l < 0) throw parameter_error("l must be >= 0");
    const double half = l + 0.5;
    const double radicand = half * half - dm.mu * p.V0 * p.V0 / (p.hbar * p.hbar * dm.m_tilde);
    if (radicand < 0.0)
        throw supercritical_error("supercritical coupling: (l+1/2)^2 < mu V0^2 / (hbar^2 m_tilde)");
    return std::sqrt(radicand);
}

inline double nu_parameter(int l, const PhysicalParams& p) {
    return nu_parameter(l, p, derive_masses(p));
}

/// V(r) = -V0 exp(-a r)/r, r > 0.
inline double yukawa_potential(double r, const PhysicalParams& p) {
    if (!(r > 0.0)) throw parameter_error("yukawa_potential requires r > 0");
    return -p.V0 * std::exp(-p.a * r) / r;
}

} // namespace yukawa
