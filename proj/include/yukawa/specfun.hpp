#pragma once

#include <cmath>

#include "yukawa/errors.hpp"

namespace yukawa {

/// Degree and exponents of a Jacobi polynomial P_n^(alpha,beta).
/// alpha, beta > -1 is the classical orthogonality range.
struct JacobiParams {
    int n;
    double alpha;
    double beta;

    void validate() const {
        if (n < 0) throw parameter_error("jacobi degree must be >= 0");
        if (!(alpha > -1.0) || !(beta > -1.0))
            throw invalid_jacobi_error("jacobi parameters must exceed -1");
    }
};

/// ln Gamma(x) for x > 0 by the Lanczos approximation (g = 7, 9 terms).
///
/// Relative error stays below ~1e-14 over the whole positive axis; the
/// normalization constants push arguments past 10^3, which plain Gamma
/// cannot survive in double precision.
inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw parameter_error("ln_gamma requires x > 0");

    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7};

    // shift into x >= 1 where the approximation is sweetest
    double shift = 0.0;
    double z = x;
    if (z < 1.0) {
        shift = -std::log(z);
        z += 1.0;
    }

    double series = coef[0];
    for (int i = 1; i < 9; ++i) series += coef[i] / (z - 1.0 + i);

    const double t = z + g - 0.5;
    const double half_log_2pi = 0.91893853320467274178; // ln(2*pi)/2
    return half_log_2pi + (z - 0.5) * std::log(t) - t + std::log(series) + shift;
}

/// B(p,q) = Gamma(p)Gamma(q)/Gamma(p+q), assembled in log space.
inline double beta_function(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw parameter_error("beta_function requires positive arguments");
    return std::exp(ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q));
}

/// P_n^(alpha,beta)(x) by the three-term recurrence in degree.
///
/// Upward recurrence is stable for the parameter ranges used here
/// (alpha can reach ~10^3 for strongly bound states; the relative error
/// grows only like n * alpha * eps).
inline double jacobi_poly(const JacobiParams& jp, double x) {
    jp.validate();
    const double al = jp.alpha, be = jp.beta;
    if (jp.n == 0) return 1.0;

    double pm1 = 1.0;
    double p = (al + 1.0) + (al + be + 2.0) * 0.5 * (x - 1.0);
    for (int k = 2; k <= jp.n; ++k) {
        const double apb = al + be;
        const double c1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0);
        const double c2 = (2.0 * k + apb - 1.0) * (al * al - be * be);
        const double c3 = (2.0 * k + apb - 1.0) * (2.0 * k + apb) * (2.0 * k + apb - 2.0);
        const double c4 = 2.0 * (k + al - 1.0) * (k + be - 1.0) * (2.0 * k + apb);
        const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

/// Terminating Gauss series 2F1(-n, b; c; x) summed exactly over n+1 terms.
///
/// c must not hit a pole inside the sum (c a nonpositive integer >= -n).
/// The alternating terms can exceed the result by several orders near
/// x = 1, so the accumulation runs in extended precision.
inline double hyp2f1_terminating(int n, double b, double c, double x) {
    if (n < 0) throw parameter_error("hyp2f1_terminating requires n >= 0");
    if (c <= 0.0) {
        const double r = std::round(c);
        if (std::abs(c - r) < 1e-12 && r >= -static_cast<double>(n))
            throw parameter_error("hyp2f1_terminating: c is a nonpositive integer inside the sum");
    }
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<long double>(-n + k) * (static_cast<long double>(b) + k))
                / ((static_cast<long double>(c) + k) * (k + 1.0L));
        term *= x;
        sum += term;
    }
    return static_cast<double>(sum);
}

/// Jacobi polynomial through the hypergeometric identity
/// P_n^(alpha,beta)(1-2s) = ((alpha+1)_n / n!) 2F1(-n, 1+alpha+beta+n; alpha+1; s).
/// Kept as a second, independent evaluation route.
inline double jacobi_poly_hyp(const JacobiParams& jp, double s) {
    jp.validate();
    long double prefactor = 1.0L;
    for (int k = 0; k < jp.n; ++k)
        prefactor *= (static_cast<long double>(jp.alpha) + 1.0L + k) / (k + 1.0L);
    return static_cast<double>(
        prefactor
        * static_cast<long double>(
            hyp2f1_terminating(jp.n, 1.0 + jp.alpha + jp.beta + jp.n, jp.alpha + 1.0, s)));
}

} // namespace yukawa
