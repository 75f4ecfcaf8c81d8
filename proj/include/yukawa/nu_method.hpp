#pragma once

#include <cmath>

#include "yukawa/errors.hpp"
#include "yukawa/specfun.hpp"

// Parametric Nikiforov-Uvarov engine.
//
// Handles second-order equations of the hypergeometric type brought to the
// template form
//
//   psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi'
//         + (-A s^2 + B s - C)/(s^2 (1 - c3 s)^2) psi = 0,
//
// deriving the constant table c4..c13, the polynomial quantization
// condition, and the bound-state wavefunction factors
//
//   psi_n(s) = N s^c12 (1 - c3 s)^c13 P_n^(c10,c11)(1 - 2 c3 s).
//
// The engine is generic over templates; the Yukawa instantiation lives in
// analytic.hpp.

namespace yukawa {

/// Coefficients of the template equation.  c3 = 0 is a different limit of
/// the method and is rejected here.
struct NuTemplate {
    double c1, c2, c3;
    double A, B, C;

    void validate() const {
        if (c3 == 0.0)
            throw unphysical_template_error("NU template requires c3 != 0");
    }
};

/// The derived constants c4..c13.
struct NuConstants {
    double c4, c5, c6, c7, c8, c9, c10, c11, c12, c13;
};

/// Derive c4..c13 from the template.
///
/// c8 >= 0 and c9 >= 0 are required for the square roots to be real; the
/// slope of tau(s) must be negative for a genuine bound-state problem and
/// is asserted here.  The Jacobi-range and positivity conditions on
/// c10..c13 are checked later, at wavefunction_factors(): energy roots may
/// be bracketed before any wavefunction is formed.
inline NuConstants derive_constants(const NuTemplate& t) {
    t.validate();
    NuConstants k{};
    k.c4 = 0.5 * (1.0 - t.c1);
    k.c5 = 0.5 * (t.c2 - 2.0 * t.c3);
    k.c6 = k.c5 * k.c5 + t.A;
    k.c7 = 2.0 * k.c4 * k.c5 - t.B;
    k.c8 = k.c4 * k.c4 + t.C;
    // c8, c9 = 0 marks the exactly-critical coupling and must stay
    // representable: both are cancellations of template-sized quantities,
    // so magnitudes below the rounding floor collapse to the boundary.
    const double eps = std::numeric_limits<double>::epsilon();
    const double c8_scale = std::max({1.0, k.c4 * k.c4, std::abs(t.C)});
    if (std::abs(k.c8) < 64.0 * eps * c8_scale) k.c8 = 0.0;
    if (k.c8 < 0.0)
        throw unphysical_template_error("NU constants: c8 = c4^2 + C is negative");
    k.c9 = t.c3 * (k.c7 + t.c3 * k.c8) + k.c6;
    const double c9_scale = std::max({1.0, std::abs(k.c6), std::abs(t.c3 * k.c7)});
    if (std::abs(k.c9) < 64.0 * eps * c9_scale) k.c9 = 0.0;
    if (k.c9 < 0.0)
        throw unphysical_template_error("NU constants: c9 is negative");
    k.c10 = t.c1 + 2.0 * k.c4 + 2.0 * std::sqrt(k.c8) - 1.0;
    k.c11 = 1.0 - t.c1 - 2.0 * k.c4 + 2.0 / t.c3 * std::sqrt(k.c9);
    k.c12 = k.c4 + std::sqrt(k.c8);
    k.c13 = -k.c4 + (std::sqrt(k.c9) - k.c5) / t.c3;

    // tau'(s) = -2 c3 - 2 (sqrt(c9) + c3 sqrt(c8)) must be negative
    const double tau_slope = -2.0 * t.c3 - 2.0 * (std::sqrt(k.c9) + t.c3 * std::sqrt(k.c8));
    if (!(tau_slope < 0.0))
        throw unphysical_template_error("NU constants: tau'(s) is not negative");

    return k;
}

/// Left side of the quantization condition; a bound state at quantum
/// number n makes this zero.
inline double quantization_residual(const NuTemplate& t, const NuConstants& k, int n) {
    if (n < 0) throw parameter_error("quantization_residual requires n >= 0");
    const double rc8 = std::sqrt(k.c8);
    const double rc9 = std::sqrt(k.c9);
    return t.c2 * n - (2.0 * n + 1.0) * k.c5 + (2.0 * n + 1.0) * (rc9 + t.c3 * rc8)
           + n * (n - 1.0) * t.c3 + k.c7 + 2.0 * t.c3 * k.c8 + 2.0 * rc8 * rc9;
}

/// Exponents and Jacobi/hypergeometric parameters of the wavefunction
/// factorization.  rho is the weight function, phi the multiplicative
/// factor; the polynomial part is P_n^(c10,c11)(1 - 2 c3 s).
struct WavefunctionFactors {
    double rho_s_exp;      ///< c10
    double rho_edge_exp;   ///< c11, exponent of (1 - c3 s)
    double phi_s_exp;      ///< c12
    double phi_edge_exp;   ///< c13
    double jacobi_alpha;   ///< c10
    double jacobi_beta;    ///< c11
    // hypergeometric form: 2F1(-n, 1 + c10 + c11 + n; c10 + 1; c3 s)
    double hyp_b_offset;   ///< 1 + c10 + c11 (add n for the second parameter)
    double hyp_c;          ///< c10 + 1
};

inline WavefunctionFactors wavefunction_factors(const NuConstants& k) {
    if (!(k.c10 > -1.0) || !(k.c11 > -1.0))
        throw invalid_jacobi_error("NU factors: c10 and c11 must exceed -1");
    if (!(k.c12 > 0.0) || !(k.c13 > 0.0))
        throw non_normalizable_error("NU factors: c12 and c13 must be positive");
    return {k.c10, k.c11, k.c12, k.c13, k.c10, k.c11, 1.0 + k.c10 + k.c11, k.c10 + 1.0};
}

/// Unnormalized wavefunction value, polynomial route (P_n by recurrence).
inline double nu_wavefunction(const WavefunctionFactors& f, double c3, int n, double s) {
    const double edge = 1.0 - c3 * s;
    const double poly = jacobi_poly({n, f.jacobi_alpha, f.jacobi_beta}, 1.0 - 2.0 * c3 * s);
    return std::pow(s, f.phi_s_exp) * std::pow(edge, f.phi_edge_exp) * poly;
}

/// Same value through the terminating-series route; agreement of the two
/// is the standing internal cross-check of the engine.
inline double nu_wavefunction_hypergeometric(const WavefunctionFactors& f, double c3, int n, double s) {
    double prefactor = 1.0;
    for (int k = 0; k < n; ++k)
        prefactor *= (f.jacobi_alpha + 1.0 + k) / (k + 1.0);
    const double edge = 1.0 - c3 * s;
    const double series = hyp2f1_terminating(n, f.hyp_b_offset + n, f.hyp_c, c3 * s);
    return prefactor * std::pow(s, f.phi_s_exp) * std::pow(edge, f.phi_edge_exp) * series;
}

} // namespace yukawa
