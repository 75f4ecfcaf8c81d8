// Command-line front end: solve single states, regenerate the embedded
// reference tables, and emit CSV for potential / wavefunction plots.
//
// Exit codes: 0 success (all comparisons within tolerance), 1 solver or
// input error, 2 comparison failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "yukawa/analytic.hpp"
#include "yukawa/golden.hpp"
#include "yukawa/io.hpp"
#include "yukawa/model.hpp"
#include "yukawa/numeric.hpp"
#include "yukawa/report.hpp"

namespace {

struct CommonFlags {
    yukawa::PhysicalParams params;
    std::string params_file;
    std::optional<double> m1, m2, V0, a, hbar;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--params", params_file, "key=value parameter file (keys: m1 m2 V0 a hbar)");
        m1.reset(); m2.reset(); V0.reset(); a.reset(); hbar.reset();
        cmd->add_option("--m1", m1, "first mass (fm^-1), default 5");
        cmd->add_option("--m2", m2, "second mass (fm^-1), default 5");
        cmd->add_option("--V0", V0, "coupling strength, default 1");
        cmd->add_option("--a", a, "screening parameter (fm^-1), default 0.01");
        cmd->add_option("--hbar", hbar, "action constant, default 1");
    }

    // file first, explicit flags override
    yukawa::PhysicalParams resolve() const {
        yukawa::PhysicalParams p;
        if (!params_file.empty()) yukawa::load_params_file(params_file).apply(p);
        if (m1) p.m1 = *m1;
        if (m2) p.m2 = *m2;
        if (V0) p.V0 = *V0;
        if (a) p.a = *a;
        if (hbar) p.hbar = *hbar;
        p.validate();
        return p;
    }
};

void print_state(const yukawa::BoundState& st, const yukawa::PhysicalParams& p,
                 const std::string& method) {
    using yukawa::format_g9;
    std::cout << "method=" << method << "\n";
    std::cout << "n=" << st.n << "\nl=" << st.l << "\n";
    std::cout << "m1=" << format_g9(p.m1) << "\nm2=" << format_g9(p.m2) << "\nV0="
              << format_g9(p.V0) << "\na=" << format_g9(p.a) << "\nhbar=" << format_g9(p.hbar)
              << "\n";
    std::cout << "energy=" << format_g9(st.energy) << "\n";
    std::cout << "binding_energy=" << format_g9(-st.energy) << "\n";
    if (st.provenance == yukawa::Provenance::analytic_ss) {
        std::cout << "nu=" << format_g9(st.nu) << "\n";
        std::cout << "epsilon=" << format_g9(st.eps) << "\n";
        std::cout << "norm_constant=" << format_g9(st.norm) << "\n";
    } else if (st.provenance == yukawa::Provenance::analytic_nr && st.eps > 0.0) {
        std::cout << "lambda=" << format_g9(st.eps) << "\n";
        std::cout << "norm_constant=" << format_g9(st.norm) << "\n";
    }
    std::cout << "provenance=" << yukawa::to_string(st.provenance) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bound-state spectrum engine for two particles in an attractive Yukawa "
        "(screened Coulomb) field: semirelativistic and Schroedinger branches, "
        "analytic and finite-difference routes.\n"
        "Convention: n counts radial nodes (n = 0 is the nodeless ground state). "
        "The embedded reference tables start at n = 1; request n = 0 for the "
        "states they omit."};
    app.require_subcommand(1);

    // ---- solve ----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "solve one (n, l) state and print key=value lines");
    CommonFlags solve_common;
    solve_common.add_to(solve);
    int n = 1, l = 0;
    std::string method = "ss-analytic";
    double tol = 1e-12;
    bool printed_form = false;
    std::optional<double> rmax_flag;
    std::optional<int> points_flag;
    solve->add_option("--n", n, "radial node count, >= 0")->check(CLI::NonNegativeNumber);
    solve->add_option("--l", l, "orbital momentum, >= 0")->check(CLI::NonNegativeNumber);
    solve->add_option("--method", method,
                      "ss-analytic | ss-numeric | nr-analytic | nr-numeric | coulomb")
        ->check(CLI::IsMember({"ss-analytic", "ss-numeric", "nr-analytic", "nr-numeric", "coulomb"}));
    solve->add_option("--tol", tol, "transcendental-solver relative tolerance, default 1e-12");
    solve->add_flag("--printed-14a", printed_form,
                    "use the as-printed variant of the semirelativistic energy equation "
                    "(second radical carries V0 instead of 1; identical at V0 = 1)");
    solve->add_option("--rmax", rmax_flag, "FD box size (fm); default scales with the state");
    solve->add_option("--points", points_flag, "FD interior mesh points, default 20000");

    // ---- table ----------------------------------------------------------
    auto* table = app.add_subcommand("table", "regenerate an embedded reference table and compare");
    CommonFlags table_common;
    table_common.add_to(table);
    int which = 1;
    double table_tol = 1e-12;
    bool table_printed = false;
    std::optional<double> table_rmax;
    std::optional<int> table_points;
    table->add_option("--which", which, "table index: 1 (semirelativistic) or 2 (Schroedinger)")
        ->check(CLI::Range(1, 2));
    table->add_option("--tol", table_tol, "analytic solver tolerance");
    table->add_flag("--printed-14a", table_printed, "as-printed energy-equation variant");
    table->add_option("--rmax", table_rmax, "override FD box size (fm)");
    table->add_option("--points", table_points, "override FD mesh points");

    // ---- wavefunction ---------------------------------------------------
    auto* wf = app.add_subcommand("wavefunction",
                                  "CSV: r, psi_analytic, psi_numeric for one state");
    CommonFlags wf_common;
    wf_common.add_to(wf);
    int wf_n = 1, wf_l = 0;
    std::string wf_method = "ss";
    double wf_tol = 1e-12;
    std::optional<double> wf_rmax;
    std::optional<int> wf_points;
    wf->add_option("--n", wf_n, "radial node count")->check(CLI::NonNegativeNumber);
    wf->add_option("--l", wf_l, "orbital momentum")->check(CLI::NonNegativeNumber);
    wf->add_option("--method", wf_method, "ss | nr (analytic+numeric pair of that branch)")
        ->check(CLI::IsMember({"ss", "nr"}));
    wf->add_option("--tol", wf_tol, "analytic solver tolerance");
    wf->add_option("--rmax", wf_rmax, "FD box size (fm)");
    wf->add_option("--points", wf_points, "FD mesh points, default 20000");

    // ---- potential ------------------------------------------------------
    auto* pot = app.add_subcommand("potential",
                                   "CSV: r, V_yukawa, V_greene_aldrich over (0, rmax]");
    CommonFlags pot_common;
    pot_common.add_to(pot);
    double pot_rmax = 200.0;
    int pot_points = 400;
    pot->add_option("--rmax", pot_rmax, "largest radius (fm), default 200");
    pot->add_option("--points", pot_points, "number of samples, default 400");

    // ---- dump-golden ----------------------------------------------------
    auto* dump = app.add_subcommand("dump-golden", "CSV dump of the embedded reference tables");
    int dump_which = 0;
    dump->add_option("--which", dump_which, "1, 2, or 0 for both (default)")
        ->check(CLI::Range(0, 2));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            const yukawa::PhysicalParams p = solve_common.resolve();
            yukawa::QuantumNumbers{n, l}.validate();
            yukawa::RadialGrid grid = yukawa::RadialGrid::default_for(n, l, p);
            if (rmax_flag) grid.r_max = *rmax_flag;
            if (points_flag) grid.m_points = *points_flag;

            if (method == "ss-analytic") {
                const auto st = yukawa::solve_ss_energy(n, l, p, tol, printed_form);
                print_state(st, p, method);
                if (printed_form) {
                    const auto consistent = yukawa::solve_ss_energy(n, l, p, tol, false);
                    if (std::abs(consistent.energy - st.energy) >
                        1e-9 * std::abs(st.energy)) {
                        std::cout << "energy_consistent_form=" << yukawa::format_g9(consistent.energy)
                                  << "\n";
                        std::cout << "note=printed and consistent energy-equation forms disagree "
                                     "(V0 != 1); the consistent form matches the wavefunction "
                                     "exponent\n";
                    }
                }
            } else if (method == "ss-numeric") {
                print_state(yukawa::solve_ss_numeric(n, l, p, grid), p, method);
            } else if (method == "nr-analytic") {
                print_state(yukawa::schrodinger_energy(n, l, p), p, method);
            } else if (method == "nr-numeric") {
                print_state(yukawa::solve_schrodinger_numeric(n, l, p, grid), p, method);
            } else { // coulomb
                yukawa::BoundState st;
                st.n = n;
                st.l = l;
                st.energy = yukawa::coulomb_energy(n, l, p);
                st.provenance = yukawa::Provenance::analytic_nr;
                std::cout << "method=coulomb\nn=" << n << "\nl=" << l << "\n";
                std::cout << "energy=" << yukawa::format_g9(st.energy) << "\n";
                std::cout << "binding_energy=" << yukawa::format_g9(-st.energy) << "\n";
                std::cout << "provenance=" << yukawa::to_string(st.provenance) << "\n";
            }
            return 0;
        }

        if (*table) {
            yukawa::PhysicalParams p = table_common.resolve();
            yukawa::TableOptions opt;
            opt.points = table_points;
            opt.r_max = table_rmax;
            opt.tol = table_tol;
            opt.printed_form = table_printed;
            const auto report = yukawa::regenerate_table(which, p, opt);
            std::cout << yukawa::render_table_report(report);
            return report.ok() ? 0 : 2;
        }

        if (*wf) {
            const yukawa::PhysicalParams p = wf_common.resolve();
            yukawa::QuantumNumbers{wf_n, wf_l}.validate();
            yukawa::RadialGrid grid = yukawa::RadialGrid::default_for(wf_n, wf_l, p);
            if (wf_rmax) grid.r_max = *wf_rmax;
            if (wf_points) grid.m_points = *wf_points;
            const auto m = (wf_method == "ss") ? yukawa::WaveMethod::ss : yukawa::WaveMethod::nr;
            const auto cmp = yukawa::build_wavefunction_comparison(wf_n, wf_l, m, p, grid, wf_tol);
            std::cout << yukawa::wavefunction_csv(cmp);
            return 0;
        }

        if (*pot) {
            const yukawa::PhysicalParams p = pot_common.resolve();
            std::cout << yukawa::potential_csv(p, pot_rmax, pot_points);
            return 0;
        }

        if (*dump) {
            std::cout << yukawa::golden_csv(dump_which);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
