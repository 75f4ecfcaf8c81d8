#pragma once

#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "yukawa/analytic.hpp"
#include "yukawa/golden.hpp"
#include "yukawa/io.hpp"
#include "yukawa/model.hpp"
#include "yukawa/numeric.hpp"

// Regeneration of the embedded reference tables and the CSV streams
// behind the figure-style outputs.  Everything here is deterministic:
// rows may be computed in parallel but are assembled in table order.

namespace yukawa {

/// Energies from three nested meshes (m/4, m/2, m points) and the
/// Richardson ratio |E(m/4)-E(m/2)| / |E(m/2)-E(m)|.  A ratio near 4
/// certifies second-order convergence; near 1 flags the logarithmic
/// critical-coupling regime.
struct ConvergenceEvidence {
    double e_quarter;
    double e_half;
    double e_full;
    double ratio;
};

struct TableRowResult {
    golden::Entry ref;
    bool solver_ok = false;
    std::string solver_message;

    double approx_calc = 0.0;   ///< binding energy, regenerated
    double approx_dev = 0.0;    ///< |approx_calc - ref.approx|
    bool approx_ok = false;

    double numeric_calc = 0.0;  ///< binding energy, own FD run
    double numeric_reldev = 0.0;
    bool numeric_checked = false; ///< comparison enforced only for n <= 4
    bool numeric_ok = false;
    std::optional<ConvergenceEvidence> evidence;

    double pct_calc = 0.0;   ///< |approx-num|/|num| * 100 from regenerated values
    double pct_ref = 0.0;    ///< same from the embedded columns
};

struct TableOptions {
    std::optional<int> points;
    std::optional<double> r_max;
    double tol = 1e-12;
    bool printed_form = false;
    double approx_tol = 5e-4;       ///< one unit in the fourth decimal
    double numeric_rel_tol = 0.05;
    int numeric_check_max_n = 4;
    bool with_evidence = true;      ///< Richardson study for >5% mismatches
    bool parallel = true;
};

struct TableReport {
    int which = 1;
    PhysicalParams base;
    TableOptions options;
    std::vector<TableRowResult> rows;

    int approx_pass_count() const {
        int c = 0;
        for (const auto& r : rows) c += (r.solver_ok && r.approx_ok) ? 1 : 0;
        return c;
    }
    bool approx_all_ok() const {
        for (const auto& r : rows)
            if (!r.solver_ok || !r.approx_ok) return false;
        return true;
    }
    /// Every enforced numeric comparison is either within tolerance or
    /// carries convergence evidence for the documented mismatch.
    bool numeric_all_explained() const {
        for (const auto& r : rows) {
            if (!r.solver_ok) return false;
            if (r.numeric_checked && !r.numeric_ok && !r.evidence.has_value()) return false;
        }
        return true;
    }
    bool ok() const { return approx_all_ok() && numeric_all_explained(); }
};

namespace detail {

inline RadialGrid grid_for_entry(int n, int l, const PhysicalParams& p, const TableOptions& opt) {
    RadialGrid g = RadialGrid::default_for(n, l, p);
    if (opt.r_max) g.r_max = *opt.r_max;
    if (opt.points) g.m_points = *opt.points;
    return g;
}

inline TableRowResult regenerate_entry(int which, const golden::Entry& ref,
                                       PhysicalParams p, const TableOptions& opt) {
    TableRowResult row;
    row.ref = ref;
    p.a = ref.a;
    try {
        const RadialGrid grid = grid_for_entry(ref.n, ref.l, p, opt);

        double e_approx, e_num;
        auto numeric_at = [&](int points) {
            RadialGrid g = grid;
            g.m_points = points;
            return (which == 1) ? solve_ss_numeric(ref.n, ref.l, p, g).energy
                                : solve_schrodinger_numeric(ref.n, ref.l, p, g).energy;
        };
        if (which == 1) {
            e_approx = solve_ss_energy(ref.n, ref.l, p, opt.tol, opt.printed_form).energy;
        } else {
            e_approx = schrodinger_energy(ref.n, ref.l, p).energy;
        }
        e_num = numeric_at(grid.m_points);

        row.approx_calc = -e_approx;
        row.approx_dev = std::abs(row.approx_calc - ref.approx);
        row.approx_ok = row.approx_dev <= opt.approx_tol;

        row.numeric_calc = -e_num;
        row.numeric_reldev = std::abs(row.numeric_calc - ref.numeric) / std::abs(ref.numeric);
        row.numeric_checked = ref.n <= opt.numeric_check_max_n;
        row.numeric_ok = row.numeric_reldev <= opt.numeric_rel_tol;

        if (opt.with_evidence && row.numeric_checked && !row.numeric_ok) {
            ConvergenceEvidence ev;
            ev.e_full = e_num;
            ev.e_half = numeric_at(grid.m_points / 2);
            ev.e_quarter = numeric_at(grid.m_points / 4);
            const double d1 = std::abs(ev.e_quarter - ev.e_half);
            const double d2 = std::abs(ev.e_half - ev.e_full);
            ev.ratio = (d2 > 0.0) ? d1 / d2 : std::numeric_limits<double>::infinity();
            row.evidence = ev;
        }

        row.pct_calc = std::abs(e_approx - e_num) / std::abs(e_num) * 100.0;
        row.pct_ref = std::abs(ref.approx - ref.numeric) / std::abs(ref.numeric) * 100.0;
        row.solver_ok = true;
    } catch (const std::exception& ex) {
        row.solver_ok = false;
        row.solver_message = ex.what();
    }
    return row;
}

} // namespace detail

/// Recompute a full table (approximation column analytically, numerical
/// column with the FD solver) and compare against the embedded data.
inline TableReport regenerate_table(int which, const PhysicalParams& base,
                                    const TableOptions& opt = {}) {
    if (which != 1 && which != 2) throw parameter_error("table index must be 1 or 2");
    TableReport report;
    report.which = which;
    report.base = base;
    report.options = opt;
    const auto& entries = golden::table(which);

    if (opt.parallel) {
        std::vector<std::future<TableRowResult>> futures;
        futures.reserve(entries.size());
        for (const auto& e : entries)
            futures.push_back(std::async(std::launch::async, [&, e] {
                return detail::regenerate_entry(which, e, base, opt);
            }));
        for (auto& f : futures) report.rows.push_back(f.get());
    } else {
        for (const auto& e : entries)
            report.rows.push_back(detail::regenerate_entry(which, e, base, opt));
    }
    return report;
}

/// Fixed-width text rendering of a table report; byte-identical across
/// runs for identical inputs.
inline std::string render_table_report(const TableReport& rep) {
    std::ostringstream os;
    char buf[256];
    os << "# table " << rep.which << " regeneration: m1=" << format_g9(rep.base.m1)
       << " m2=" << format_g9(rep.base.m2) << " V0=" << format_g9(rep.base.V0)
       << " hbar=" << format_g9(rep.base.hbar) << "\n";
    os << "# approx tolerance " << format_g9(rep.options.approx_tol)
       << " absolute; numeric comparison " << format_g9(rep.options.numeric_rel_tol * 100.0)
       << "% relative for n <= " << rep.options.numeric_check_max_n
       << " (reference FD configuration unreported; EXPL = mismatch with convergence evidence)\n";
    os << "  n  l      a  approx(ref)  approx(calc)    |dev|  st    num(ref)   num(calc)  "
          "rel.dev  st     pct(calc)  pct(ref)\n";
    for (const auto& r : rep.rows) {
        if (!r.solver_ok) {
            std::snprintf(buf, sizeof buf, "  %d  %d  %.3f  solver error: %s\n", r.ref.n, r.ref.l,
                          r.ref.a, r.solver_message.c_str());
            os << buf;
            continue;
        }
        const char* ast = r.approx_ok ? "ok " : "DEV";
        std::string nst = "--  ";
        if (r.numeric_checked)
            nst = r.numeric_ok ? "ok  " : (r.evidence ? "EXPL" : "DEV ");
        std::snprintf(buf, sizeof buf,
                      "  %d  %d  %.3f  %11.5f  %12.8f  %7.1e  %s  %10.5f  %10.6f  %6.2f%%  %s  %9.4f%%  %7.4f%%\n",
                      r.ref.n, r.ref.l, r.ref.a, r.ref.approx, r.approx_calc, r.approx_dev, ast,
                      r.ref.numeric, r.numeric_calc, r.numeric_reldev * 100.0, nst.c_str(),
                      r.pct_calc, r.pct_ref);
        os << buf;
        if (r.evidence) {
            std::snprintf(buf, sizeof buf,
                          "        grid evidence: E(m/4)=%.8f E(m/2)=%.8f E(m)=%.8f ratio=%.2f%s\n",
                          r.evidence->e_quarter, r.evidence->e_half, r.evidence->e_full,
                          r.evidence->ratio,
                          (r.evidence->ratio > 2.5 && r.evidence->ratio < 6.0)
                              ? " (second order, converged; reference value deviates)"
                              : " (slow convergence: critical-coupling regime)");
            os << buf;
        }
    }
    int checked = 0, within = 0, explained = 0;
    for (const auto& r : rep.rows) {
        if (r.solver_ok && r.numeric_checked) {
            ++checked;
            if (r.numeric_ok) ++within;
            else if (r.evidence) ++explained;
        }
    }
    os << "# approx column: " << rep.approx_pass_count() << "/" << rep.rows.size()
       << " within tolerance\n";
    os << "# numeric column (n <= " << rep.options.numeric_check_max_n << "): " << within << "/"
       << checked << " within " << format_g9(rep.options.numeric_rel_tol * 100.0) << "%; "
       << explained << " documented mismatches with evidence\n";
    os << "status: " << (rep.ok() ? "OK" : "COMPARISON-FAILURE") << "\n";
    return os.str();
}

/// CSV columns r, V_yukawa, V_greene_aldrich on r = i * r_max/points.
inline std::string potential_csv(const PhysicalParams& p, double r_max, int points) {
    if (!(r_max > 0.0) || points < 1) throw parameter_error("potential_csv: bad r range");
    std::ostringstream os;
    os << "r,V_yukawa,V_greene_aldrich\n";
    for (int i = 1; i <= points; ++i) {
        const double r = r_max * i / points;
        os << format_g9(r) << ',' << format_g9(yukawa_potential(r, p)) << ','
           << format_g9(greene_aldrich_potential(r, p)) << "\n";
    }
    return os.str();
}

enum class WaveMethod { ss, nr };

/// Analytic and FD wavefunctions of one state sampled on the same mesh,
/// both renormalized to unit discrete norm and sign-aligned.
struct WavefunctionComparison {
    RadialGrid grid;
    BoundState analytic_state;
    BoundState numeric_state;
    std::vector<double> r;             ///< size m+2, includes both endpoints
    std::vector<double> psi_analytic;
    std::vector<double> psi_numeric;
    double l2_difference = 0.0;
};

namespace detail {

inline void normalize_and_align(std::vector<double>& v, double h) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm * h);
    if (norm == 0.0) return;
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    double sign = 1.0;
    for (double x : v) {
        if (std::abs(x) > 0.1 * vmax) {
            sign = (x < 0.0) ? -1.0 : 1.0;
            break;
        }
    }
    for (double& x : v) {
        x *= sign / norm;
        if (x == 0.0) x = 0.0; // scrub -0 so CSV output stays clean
    }
}

} // namespace detail

inline WavefunctionComparison build_wavefunction_comparison(int n, int l, WaveMethod method,
                                                            const PhysicalParams& p,
                                                            const RadialGrid& grid,
                                                            double tol = 1e-12) {
    WavefunctionComparison cmp;
    cmp.grid = grid;

    NumericSolution num = (method == WaveMethod::ss)
                              ? solve_ss_numeric_full(n, l, p, derive_masses(p), grid)
                              : solve_schrodinger_numeric_full(n, l, p, derive_masses(p), grid);
    cmp.numeric_state = num.state;
    cmp.analytic_state = (method == WaveMethod::ss) ? solve_ss_energy(n, l, p, tol)
                                                    : schrodinger_energy(n, l, p);

    const int m = grid.m_points;
    cmp.r.resize(m + 2);
    cmp.psi_analytic.assign(m + 2, 0.0);
    cmp.psi_numeric.assign(m + 2, 0.0);
    cmp.r[0] = 0.0;
    cmp.r[m + 1] = grid.r_max;
    for (int i = 0; i < m; ++i) {
        cmp.r[i + 1] = grid.r(i);
        cmp.psi_analytic[i + 1] = detail::wavefunction_value(cmp.analytic_state, p, cmp.r[i + 1]);
        cmp.psi_numeric[i + 1] = num.u[i];
    }
    detail::normalize_and_align(cmp.psi_analytic, grid.h());
    detail::normalize_and_align(cmp.psi_numeric, grid.h());

    double acc = 0.0;
    for (int i = 0; i < m + 2; ++i) {
        const double d = cmp.psi_analytic[i] - cmp.psi_numeric[i];
        acc += d * d;
    }
    cmp.l2_difference = std::sqrt(acc * grid.h());
    return cmp;
}

inline std::string wavefunction_csv(const WavefunctionComparison& cmp) {
    std::ostringstream os;
    os << "r,psi_analytic,psi_numeric\n";
    for (size_t i = 0; i < cmp.r.size(); ++i)
        os << format_g9(cmp.r[i]) << ',' << format_g9(cmp.psi_analytic[i]) << ','
           << format_g9(cmp.psi_numeric[i]) << "\n";
    return os.str();
}

/// CSV dump of the embedded tables (which = 0 dumps both).
inline std::string golden_csv(int which) {
    std::ostringstream os;
    os << "table,n,l,a,approx,numeric\n";
    for (int t = 1; t <= 2; ++t) {
        if (which != 0 && which != t) continue;
        for (const auto& e : golden::table(t))
            os << t << ',' << e.n << ',' << e.l << ',' << format_g9(e.a) << ','
               << format_g9(e.approx) << ',' << format_g9(e.numeric) << "\n";
    }
    return os.str();
}

} // namespace yukawa
