#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "yukawa/errors.hpp"
#include "yukawa/model.hpp"
#include "yukawa/nu_method.hpp"
#include "yukawa/specfun.hpp"

// Analytic bound states of the screened-Coulomb two-body problem.
//
// The semirelativistic radial equation, after the exponential-ratio
// (Greene-Aldrich) approximation of 1/r and 1/r^2 and the substitution
// s = exp(-2 a r), is of the NU template form with c1 = c2 = c3 = 1 and
//
//   A(E) = (mu/hbar^2) (V0 - E/2a) [1/a - (V0 - E/2a)/m_tilde]
//   B(E) = -l(l+1) + (mu/(hbar^2 a)) [(V0 - E/a) + (E/m_tilde)(V0 - E/2a)]
//   C(E) = -(mu/hbar^2) (E/2a^2) (1 + E/2m_tilde).
//
// The quantization condition collapses to the transcendental equation
//
//   sqrt(A) - sqrt(C) = n + nu + 1/2,    nu = sqrt((l+1/2)^2 - mu V0^2/(hbar^2 m_tilde)),
//
// solved here by a bracketing scan plus bisection.  Wavefunctions are
//
//   psi(r) = N s^x (1-s)^y P_n^(2x, 2y-1)(1 - 2s),
//
// with (x, y) = (epsilon, nu + 1/2) for the semirelativistic branch and
// (lambda, l + 1) for the Schroedinger limit; the normalization N is
// assembled in log space because x routinely exceeds 700.

namespace yukawa {

enum class Provenance { analytic_ss, analytic_nr, numeric_fd };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::analytic_ss: return "analytic-SS";
        case Provenance::analytic_nr: return "analytic-NR";
        case Provenance::numeric_fd: return "numeric-FD";
    }
    return "?";
}

/// A converged bound state.
///
/// `eps` is the exponent of s = exp(-2 a r): epsilon for semirelativistic
/// states, lambda for Schroedinger states.  `nu` holds l + 1/2 for the
/// Schroedinger branch so that the shared wavefunction form
/// y = nu + 1/2 applies to both.  Numeric states carry energy only
/// (eps = 0, norm = 1).
struct BoundState {
    int n = 0;
    int l = 0;
    double energy = 0.0;
    double nu = 0.0;
    double eps = 0.0;
    double norm = 1.0;
    double log_norm = 0.0;
    Provenance provenance = Provenance::analytic_ss;
};

/// Coefficients of the transformed equation at trial energy E.
struct AbcCoefficients {
    double A, B, C;
};

inline AbcCoefficients abc_coefficients(double E, int l, const PhysicalParams& p,
                                        const DerivedMasses& dm) {
    if (p.a == 0.0)
        throw parameter_error("abc_coefficients: a = 0 is the Coulomb limit, use coulomb_energy");
    if (!(E < 0.0)) throw branch_error("abc_coefficients requires E < 0");
    const double h2 = p.hbar * p.hbar;
    const double w = p.V0 - E / (2.0 * p.a);
    const double A = (dm.mu / h2) * w * (1.0 / p.a - w / dm.m_tilde);
    const double B = -static_cast<double>(l) * (l + 1)
                     + (dm.mu / (h2 * p.a))
                           * ((p.V0 - E / p.a) + (E / dm.m_tilde) * w);
    const double C = -(dm.mu / h2) * (E / (2.0 * p.a * p.a)) * (1.0 + E / (2.0 * dm.m_tilde));
    return {A, B, C};
}

inline AbcCoefficients abc_coefficients(double E, int l, const PhysicalParams& p) {
    return abc_coefficients(E, l, p, derive_masses(p));
}

/// epsilon = sqrt(-(mu/2 hbar^2) (E/a^2) (1 + E/2 m_tilde)); equals sqrt(C).
inline double epsilon_parameter(double E, const PhysicalParams& p, const DerivedMasses& dm) {
    if (p.a == 0.0) throw parameter_error("epsilon_parameter requires a > 0");
    if (!(E < 0.0) || !(1.0 + E / (2.0 * dm.m_tilde) > 0.0))
        throw branch_error("epsilon_parameter: E must lie in (-2 m_tilde, 0)");
    return std::sqrt(-(dm.mu / (2.0 * p.hbar * p.hbar)) * (E / (p.a * p.a))
                     * (1.0 + E / (2.0 * dm.m_tilde)));
}

inline double epsilon_parameter(double E, const PhysicalParams& p) {
    return epsilon_parameter(E, p, derive_masses(p));
}

/// Residual of the transcendental energy equation,
/// f(E) = sqrt(A) - sqrt(C) - (n + nu + 1/2); a bound state is a zero.
///
/// The difference of the two large radicals is formed as
/// (A - C)/(sqrt A + sqrt C) to avoid cancellation (both reach ~1e6 at
/// low screening while the difference is O(1)).
///
/// `printed_form` switches the second radical to the variant carrying
/// (V0 + E/2m_tilde) instead of (1 + E/2m_tilde); the two coincide at
/// V0 = 1.  The default is the form consistent with the wavefunction
/// exponent epsilon.
inline double ss_energy_residual(double E, int n, int l, const PhysicalParams& p,
                                 const DerivedMasses& dm, bool printed_form = false) {
    const AbcCoefficients abc = abc_coefficients(E, l, p, dm);
    double C = abc.C;
    if (printed_form)
        C = -(dm.mu / (p.hbar * p.hbar)) * (E / (2.0 * p.a * p.a))
            * (p.V0 + E / (2.0 * dm.m_tilde));
    if (abc.A < 0.0 || C < 0.0)
        throw branch_error("ss_energy_residual: outside physical branch");
    const double nu = nu_parameter(l, p, dm);
    const double sum_roots = std::sqrt(abc.A) + std::sqrt(C);
    const double target = n + nu + 0.5;
    if (sum_roots == 0.0) return -target;
    return (abc.A - C) / sum_roots - target;
}

inline double ss_energy_residual(double E, int n, int l, const PhysicalParams& p,
                                 bool printed_form = false) {
    return ss_energy_residual(E, n, l, p, derive_masses(p), printed_form);
}

namespace detail {

/// s = exp(-2 a r) and 1 - s, the latter via expm1 so r -> 0 stays exact.
struct SVar {
    double s;
    double one_minus_s;
};

inline SVar s_variable(double a, double r) {
    return {std::exp(-2.0 * a * r), -std::expm1(-2.0 * a * r)};
}

/// log of the normalization constant for psi = N s^x (1-s)^y P_n^(2x,2y-1):
///   N^2 = 4 a x (n+x+y) n! Gamma(n+2x+2y) / [(n+y) Gamma(n+2y) Gamma(n+2x+1)]
inline double log_norm_constant(int n, double x, double y, double a) {
    if (!(x > 0.0) || !(y > 0.0) || !(a > 0.0))
        throw non_normalizable_error("normalization requires positive exponents and a > 0");
    const double ln2 = std::log(4.0 * a * x) + std::log(n + x + y) + ln_gamma(n + 1.0)
                       + ln_gamma(n + 2.0 * x + 2.0 * y) - std::log(n + y)
                       - ln_gamma(n + 2.0 * y) - ln_gamma(n + 2.0 * x + 1.0);
    return 0.5 * ln2;
}

/// psi(r) with all powers assembled in log space.  Returns 0 once the log
/// magnitude falls below the double underflow floor.
inline double wavefunction_value(const BoundState& st, const PhysicalParams& p, double r) {
    if (!(r >= 0.0)) throw parameter_error("wavefunction requires r >= 0");
    if (r == 0.0) return 0.0;
    const SVar sv = s_variable(p.a, r);
    const double x = st.eps;
    const double y = st.nu + 0.5;
    const double lg = st.log_norm + x * (-2.0 * p.a * r) + y * std::log(sv.one_minus_s);
    const double poly = jacobi_poly({st.n, 2.0 * x, 2.0 * y - 1.0}, 1.0 - 2.0 * sv.s);
    if (poly == 0.0) return 0.0;
    const double lmag = lg + std::log(std::abs(poly));
    if (lmag < -745.0) return 0.0;
    return (poly > 0.0 ? 1.0 : -1.0) * std::exp(lmag);
}

/// Count the zeros of P_n^(alpha,beta) over x in (-1, 1), which is the
/// interior node count of the factored wavefunction.  The scan grid is
/// log-refined toward both endpoints because large alpha squeezes the
/// zeros against x = -1.
inline int count_polynomial_nodes(int n, double alpha, double beta) {
    if (n == 0) return 0;
    std::vector<double> xs;
    const int per_side = 4000 + 2000 * n;
    xs.reserve(2 * per_side);
    const double lo = -12.0, hi = std::log(1.0); // t in [1e-12, 1], log spaced
    for (int i = 0; i <= per_side; ++i) {
        const double t = std::pow(10.0, lo + (hi - lo) * i / per_side);
        xs.push_back(-1.0 + 2.0 * t); // dense near x = -1
        xs.push_back(1.0 - 2.0 * t);  // dense near x = +1
    }
    std::sort(xs.begin(), xs.end());
    int changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (double xv : xs) {
        if (xv <= -1.0 || xv >= 1.0) continue;
        const double v = jacobi_poly({n, alpha, beta}, xv);
        if (v == 0.0) continue;
        if (have_prev && prev * v < 0.0) ++changes;
        prev = v;
        have_prev = true;
    }
    return changes;
}

} // namespace detail

/// Normalization constant of a semirelativistic state (log-space assembly).
inline double ss_norm_constant(const BoundState& st, const PhysicalParams& p) {
    return std::exp(detail::log_norm_constant(st.n, st.eps, st.nu + 0.5, p.a));
}

/// psi(r) = N s^eps (1-s)^(1/2+nu) P_n^(2 eps, 2 nu)(1 - 2s), s = exp(-2 a r).
inline double ss_wavefunction(double r, const BoundState& st, const PhysicalParams& p) {
    return detail::wavefunction_value(st, p, r);
}

/// Interior node count of an analytic state's wavefunction.
inline int count_radial_nodes(const BoundState& st) {
    return detail::count_polynomial_nodes(st.n, 2.0 * st.eps, 2.0 * st.nu);
}

/// Solve the transcendental energy equation for the state with n radial
/// nodes and orbital momentum l.
///
/// A 2000-step logarithmic scan of E in (-min(0.99*2m_tilde, 2 mu V0^2), 0)
/// locates sign changes of the residual; the bracket is then bisected to
/// relative width `tol`.  The residual is monotone on the physical branch
/// for screened-Coulomb parameters, but the scan-first design survives
/// non-monotonicity: each bracket is refined until one yields the
/// requested node count.
inline BoundState solve_ss_energy(int n, int l, const PhysicalParams& p,
                                  const DerivedMasses& dm, double tol = 1e-12,
                                  bool printed_form = false) {
    if (n < 0 || l < 0) throw parameter_error("quantum numbers must be nonnegative");
    if (p.a == 0.0)
        throw parameter_error("solve_ss_energy: a = 0 is the Coulomb limit, use coulomb_energy");
    const double nu = nu_parameter(l, p, dm); // throws if supercritical

    const auto residual = [&](double E) {
        return ss_energy_residual(E, n, l, p, dm, printed_form);
    };

    const double lo_mag = std::min(1.98 * dm.m_tilde, 2.0 * dm.mu * p.V0 * p.V0 / (p.hbar * p.hbar));
    const double hi_mag = 1e-10;
    const int steps = 2000;

    // scan from deep energies upward, skipping off-branch points
    double prev_E = 0.0, prev_f = 0.0;
    bool have_prev = false;
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i <= steps; ++i) {
        const double mag = lo_mag * std::pow(hi_mag / lo_mag, static_cast<double>(i) / steps);
        const double E = -mag;
        double f;
        try {
            f = residual(E);
        } catch (const branch_error&) {
            have_prev = false;
            continue;
        }
        if (have_prev && ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0)))
            brackets.emplace_back(prev_E, E);
        if (f == 0.0) brackets.emplace_back(E, E);
        prev_E = E;
        prev_f = f;
        have_prev = true;
    }
    if (brackets.empty())
        throw no_bound_state_error("solve_ss_energy: no sign change in the scan window");

    for (const auto& [bl, bh] : brackets) {
        double elo = bl, ehi = bh;
        double flo = residual(elo);
        double root = 0.5 * (elo + ehi);
        for (int it = 0; it < 200; ++it) {
            root = 0.5 * (elo + ehi);
            if (root == elo || root == ehi) break;
            const double fm = residual(root);
            if (fm == 0.0) break;
            if ((flo < 0.0) == (fm < 0.0)) {
                elo = root;
                flo = fm;
            } else {
                ehi = root;
            }
            if (ehi - elo <= tol * std::abs(root)) break;
        }

        BoundState st;
        st.n = n;
        st.l = l;
        st.energy = root;
        st.nu = nu;
        st.eps = epsilon_parameter(root, p, dm);
        st.log_norm = detail::log_norm_constant(n, st.eps, nu + 0.5, p.a);
        st.norm = std::exp(st.log_norm);
        st.provenance = Provenance::analytic_ss;
        if (count_radial_nodes(st) == n) return st;
        // wrong branch; try the next bracket
    }
    throw numerical_error("solve_ss_energy: no bracket produced the requested node count");
}

inline BoundState solve_ss_energy(int n, int l, const PhysicalParams& p, double tol = 1e-12,
                                  bool printed_form = false) {
    return solve_ss_energy(n, l, p, derive_masses(p), tol, printed_form);
}

/// Closed-form Coulomb spectrum, E = -(mu/2 hbar^2) V0^2/(n+l+1)^2.
inline double coulomb_energy(int n, int l, const PhysicalParams& p) {
    if (n < 0 || l < 0) throw parameter_error("quantum numbers must be nonnegative");
    const DerivedMasses dm = derive_masses(p);
    const double N = n + l + 1;
    return -(dm.mu / (2.0 * p.hbar * p.hbar)) * p.V0 * p.V0 / (N * N);
}

namespace detail {

inline BoundState make_nr_state(int n, int l, double E, const PhysicalParams& p,
                                const DerivedMasses& dm) {
    BoundState st;
    st.n = n;
    st.l = l;
    st.energy = E;
    st.nu = l + 0.5;
    st.provenance = Provenance::analytic_nr;
    if (E < 0.0 && p.a > 0.0) {
        st.eps = std::sqrt(-dm.mu * E / (2.0 * p.hbar * p.hbar)) / p.a; // lambda
        st.log_norm = log_norm_constant(n, st.eps, l + 1.0, p.a);
        st.norm = std::exp(st.log_norm);
    }
    return st;
}

} // namespace detail

/// Schroedinger-limit energy, literal closed form
///   E = -a [ hbar^2 a (n+l+1)^2 / 2mu + mu V0^2 / (2 hbar^2 a (n+l+1)^2) - 2 V0 ].
///
/// The -2V0 term reproduces the reference tables.  A variant consistent
/// with the m_tilde -> infinity limit of the semirelativistic equation
/// (one V0) is provided as schrodinger_energy_consistent below; the two
/// differ by a constant shift a V0.
inline BoundState schrodinger_energy(int n, int l, const PhysicalParams& p) {
    if (n < 0 || l < 0) throw parameter_error("quantum numbers must be nonnegative");
    const DerivedMasses dm = derive_masses(p);
    const double N = n + l + 1;
    if (p.a == 0.0)
        return detail::make_nr_state(n, l, coulomb_energy(n, l, p), p, dm);
    const double h2 = p.hbar * p.hbar;
    const double E = -p.a
                     * (h2 * p.a * N * N / (2.0 * dm.mu)
                        + dm.mu * p.V0 * p.V0 / (2.0 * h2 * p.a * N * N) - 2.0 * p.V0);
    return detail::make_nr_state(n, l, E, p, dm);
}

/// Limit-consistent Schroedinger energy (Hulthen-type spectrum),
///   E = -[ mu V0^2/(2 hbar^2 N^2) - a V0 + a^2 hbar^2 N^2/(2 mu) ].
inline BoundState schrodinger_energy_consistent(int n, int l, const PhysicalParams& p) {
    if (n < 0 || l < 0) throw parameter_error("quantum numbers must be nonnegative");
    const DerivedMasses dm = derive_masses(p);
    const double N = n + l + 1;
    const double h2 = p.hbar * p.hbar;
    const double E = -(dm.mu * p.V0 * p.V0 / (2.0 * h2 * N * N) - p.a * p.V0
                       + p.a * p.a * h2 * N * N / (2.0 * dm.mu));
    return detail::make_nr_state(n, l, E, p, dm);
}

/// psi(r) = C s^lambda (1-s)^(l+1) P_n^(2 lambda, 2l+1)(1 - 2s).
inline double schrodinger_wavefunction(double r, const BoundState& st, const PhysicalParams& p) {
    if (!(st.energy < 0.0)) throw no_bound_state_error("schrodinger_wavefunction: E >= 0");
    if (st.eps == 0.0) throw parameter_error("state carries no wavefunction (a = 0?)");
    return detail::wavefunction_value(st, p, r);
}

inline double schrodinger_norm_constant(const BoundState& st, const PhysicalParams& p) {
    if (!(st.energy < 0.0)) throw no_bound_state_error("schrodinger_norm_constant: E >= 0");
    return std::exp(detail::log_norm_constant(st.n, st.eps, st.l + 1.0, p.a));
}

/// The exponential-ratio approximant of the potential,
///   V(r) = -2 a V0 exp(-2 a r) / (1 - exp(-2 a r)),
/// which shares the -V0/r singularity and is accurate for a r << 1.
inline double greene_aldrich_potential(double r, const PhysicalParams& p) {
    if (!(r > 0.0)) throw parameter_error("greene_aldrich_potential requires r > 0");
    if (p.a == 0.0) return -p.V0 / r;
    return 2.0 * p.a * p.V0 * std::exp(-2.0 * p.a * r) / std::expm1(-2.0 * p.a * r);
}

} // namespace yukawa
