#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "yukawa/analytic.hpp"
#include "yukawa/model.hpp"
#include "yukawa/nu_method.hpp"

using namespace yukawa;

namespace {
PhysicalParams reference_params(double a) {
    PhysicalParams p;
    p.m1 = 5.0;
    p.m2 = 5.0;
    p.V0 = 1.0;
    p.a = a;
    return p;
}

NuTemplate yukawa_template(double E, int l, const PhysicalParams& p, const DerivedMasses& dm) {
    const auto abc = abc_coefficients(E, l, p, dm);
    return {1.0, 1.0, 1.0, abc.A, abc.B, abc.C};
}
} // namespace

TEST_CASE("constants of the all-ones template with A = B = C = 0") {
    const NuTemplate t{1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
    const NuConstants k = derive_constants(t);
    CHECK(k.c4 == 0.0);
    CHECK(k.c5 == -0.5);
    CHECK(k.c6 == 0.25);
    CHECK(k.c7 == 0.0);
    CHECK(k.c8 == 0.0);
    CHECK(k.c9 == 0.25);
    CHECK(k.c10 == 0.0);
    CHECK(k.c11 == 1.0);
    CHECK(k.c12 == 0.0);
    CHECK(k.c13 == 1.0);
    // c12 = 0 violates the positivity requirement at the factor step
    CHECK_THROWS_AS(wavefunction_factors(k), non_normalizable_error);
}

TEST_CASE("template validation") {
    CHECK_THROWS_AS(derive_constants({1.0, 1.0, 0.0, 1.0, 1.0, 1.0}), unphysical_template_error);
    // C < 0 makes c8 negative
    CHECK_THROWS_AS(derive_constants({1.0, 1.0, 1.0, 0.0, 0.0, -1.0}), unphysical_template_error);
    // 1/4 + A - B + C < 0 makes c9 negative
    CHECK_THROWS_AS(derive_constants({1.0, 1.0, 1.0, 0.0, 1.0, 0.0}), unphysical_template_error);
    // nonnegative tau slope is rejected
    CHECK_THROWS_AS(derive_constants({1.0, 1.0, -2.0, -3.0, 0.0, 0.0}), unphysical_template_error);
}

TEST_CASE("screened-Coulomb instantiation reproduces the printed constant table") {
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> er(-1.2, -0.01);
    const PhysicalParams p = reference_params(0.005);
    const DerivedMasses dm = derive_masses(p);
    for (int l = 0; l <= 3; ++l) {
        for (int i = 0; i < 50; ++i) {
            const double E = er(gen);
            const NuTemplate t = yukawa_template(E, l, p, dm);
            const NuConstants k = derive_constants(t);
            CHECK(k.c4 == 0.0);
            CHECK(k.c5 == -0.5);
            CHECK(k.c6 == Approx(0.25 + t.A).epsilon(1e-14));
            CHECK(k.c7 == Approx(-t.B).epsilon(1e-14));
            CHECK(k.c8 == Approx(t.C).epsilon(1e-14));
            const double c9_direct = 0.25 + t.A - t.B + t.C;
            CHECK(k.c9 == Approx(c9_direct).margin(1e-9 * std::abs(t.B)));

            // c9 is E-independent: (l+1/2)^2 - mu V0^2/(hbar^2 m_tilde)
            const double nu = nu_parameter(l, p, dm);
            CHECK(k.c9 == Approx(nu * nu).margin(1e-8 * std::max(1.0, std::abs(t.B))));

            // c10 = 2 sqrt(C) = 2 epsilon
            const double eps = epsilon_parameter(E, p, dm);
            CHECK(k.c10 == Approx(2.0 * eps).epsilon(1e-12));
            CHECK(k.c12 == Approx(eps).epsilon(1e-12));
            CHECK(k.c11 == Approx(2.0 * nu).margin(1e-7));
            CHECK(k.c13 == Approx(0.5 + nu).margin(1e-7));
        }
    }
}

TEST_CASE("quantization residual reduces to (n + 1/2 + sqrt(c9) + sqrt(C))^2 - A") {
    std::mt19937 gen(37);
    std::uniform_real_distribution<double> ar(0.0, 50.0), cr(0.0, 30.0), nur(0.0, 4.0);
    std::uniform_int_distribution<int> nr(0, 6);
    for (int i = 0; i < 400; ++i) {
        // build a template with guaranteed-real constants: pick C, nu2 >= 0
        const double A = ar(gen);
        const double C = cr(gen);
        const double nu2 = nur(gen);
        const double B = 0.25 + A + C - nu2; // forces c9 = nu2
        const int n = nr(gen);
        const NuTemplate t{1.0, 1.0, 1.0, A, B, C};
        const NuConstants k = derive_constants(t);
        const double res = quantization_residual(t, k, n);
        const double reduced = std::pow(n + 0.5 + std::sqrt(nu2) + std::sqrt(C), 2) - A;
        const double scale = std::max({1.0, std::abs(A), std::abs(B), std::abs(C)});
        CHECK(res == Approx(reduced).margin(1e-12 * scale * 10));
    }
}

TEST_CASE("residual vanishes at a converged transcendental root") {
    const PhysicalParams p = reference_params(0.001);
    const DerivedMasses dm = derive_masses(p);
    const BoundState st = solve_ss_energy(1, 0, p, dm);
    const NuTemplate t = yukawa_template(st.energy, 0, p, dm);
    const NuConstants k = derive_constants(t);
    CHECK(std::abs(quantization_residual(t, k, 1)) <= 1e-8);
    // neighbouring n do not satisfy it
    CHECK(std::abs(quantization_residual(t, k, 0)) > 1e-3);
    CHECK(std::abs(quantization_residual(t, k, 2)) > 1e-3);
}

TEST_CASE("residual is strictly increasing in n for positive c8, c9") {
    const NuTemplate t{1.0, 1.0, 1.0, 30.0, 0.25 + 30.0 + 4.0 - 2.0, 4.0};
    const NuConstants k = derive_constants(t);
    double prev = quantization_residual(t, k, 0);
    for (int n = 1; n <= 5; ++n) {
        const double cur = quantization_residual(t, k, n);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("wavefunction factors carry the screened-Coulomb exponents") {
    const PhysicalParams p = reference_params(0.005);
    const DerivedMasses dm = derive_masses(p);
    const BoundState st = solve_ss_energy(2, 1, p, dm);
    const NuTemplate t = yukawa_template(st.energy, 1, p, dm);
    const NuConstants k = derive_constants(t);
    const WavefunctionFactors f = wavefunction_factors(k);

    const double eps = st.eps;
    const double nu = st.nu;
    CHECK(f.rho_s_exp == Approx(2.0 * eps).epsilon(1e-10));       // rho = s^(2eps) (1-s)^(2nu)
    CHECK(f.rho_edge_exp == Approx(2.0 * nu).margin(1e-8));
    CHECK(f.phi_s_exp == Approx(eps).epsilon(1e-10));             // phi = s^eps (1-s)^(1/2+nu)
    CHECK(f.phi_edge_exp == Approx(0.5 + nu).margin(1e-8));
    CHECK(f.jacobi_alpha == f.rho_s_exp);
    CHECK(f.jacobi_beta == f.rho_edge_exp);
    CHECK(f.hyp_c == Approx(1.0 + f.jacobi_alpha).epsilon(1e-12));
}

TEST_CASE("polynomial and hypergeometric wavefunction routes agree") {
    std::mt19937 gen(41);
    std::uniform_real_distribution<double> epsr(0.1, 6.0), nur(0.0, 3.0), ar(0.0, 20.0), sr(0.01, 0.99);
    std::uniform_int_distribution<int> nr(0, 8);
    for (int i = 0; i < 200; ++i) {
        const double eps = epsr(gen), nu = nur(gen), A = ar(gen);
        const double C = eps * eps;
        const double B = 0.25 + A + C - nu * nu;
        const NuTemplate t{1.0, 1.0, 1.0, A, B, C};
        const WavefunctionFactors f = wavefunction_factors(derive_constants(t));
        const int n = nr(gen);
        const double s = sr(gen);
        const double v1 = nu_wavefunction(f, t.c3, n, s);
        const double v2 = nu_wavefunction_hypergeometric(f, t.c3, n, s);
        // scale against the factored working magnitude; the polynomial part
        // crosses zero, where pointwise-relative comparison is meaningless
        const double pref = std::pow(s, f.phi_s_exp) * std::pow(1.0 - s, f.phi_edge_exp);
        const double pmag =
            std::max({1.0, std::abs(jacobi_poly({n, f.jacobi_alpha, f.jacobi_beta}, 1.0)),
                      std::abs(jacobi_poly({n, f.jacobi_alpha, f.jacobi_beta}, -1.0))});
        const double scale = std::max({std::abs(v1), std::abs(v2), pref * pmag});
        CHECK(std::abs(v1 - v2) <= std::max(1e-280, 1e-10 * scale));
    }
}

TEST_CASE("wavefunction vanishes at s = 0 for positive c12") {
    const NuTemplate t{1.0, 1.0, 1.0, 12.0, 0.25 + 12.0 + 1.0 - 1.0, 1.0};
    const WavefunctionFactors f = wavefunction_factors(derive_constants(t));
    CHECK(nu_wavefunction(f, 1.0, 2, 0.0) == 0.0);
}
