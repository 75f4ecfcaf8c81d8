#pragma once

#include <array>
#include <cstddef>

// Embedded reference spectra used for regression comparison.  Entries are
// binding energies -E (positive) as published, four (occasionally five)
// decimals, for m1 = m2 = 5 fm^-1, V0 = 1, hbar = 1 and screening
// a in {0.01, 0.005, 0.001} fm^-1.  The approximation column comes from
// the closed-form/transcendental solutions, the numerical column from the
// source's own finite-difference runs (configuration unreported there, so
// it is a comparison target, not ground truth).

namespace yukawa::golden {

struct Entry {
    int n;          ///< radial node count as tabulated (starts at 1)
    int l;
    double a;
    double approx;  ///< binding energy -E, approximation column
    double numeric; ///< binding energy -E, numerical column
};

constexpr int rows_per_table = 13;
constexpr int entries_per_table = 39;

/// Semirelativistic table: (n, l, a, approx, numeric).
inline constexpr std::array<Entry, entries_per_table> table1{{
    {1, 0, 0.010, 0.5032, 0.5035},  {1, 0, 0.005, 0.5082, 0.5084},  {1, 0, 0.001, 0.5122, 0.5124},
    {2, 0, 0.010, 0.1843, 0.1912},  {2, 0, 0.005, 0.1892, 0.1960},  {2, 0, 0.001, 0.1932, 0.2000},
    {2, 1, 0.010, 0.0709, 0.0718},  {2, 1, 0.005, 0.07568, 0.0765}, {2, 1, 0.001, 0.0796, 0.0803},
    {3, 0, 0.010, 0.0907, 0.0978},  {3, 0, 0.005, 0.0956, 0.1025},  {3, 0, 0.001, 0.0995, 0.1064},
    {3, 1, 0.010, 0.0419, 0.0416},  {3, 1, 0.005, 0.0465, 0.0460},  {3, 1, 0.001, 0.0504, 0.0499},
    {3, 2, 0.010, 0.0258, 0.0258},  {3, 2, 0.005, 0.0303, 0.0300},  {3, 2, 0.001, 0.0341, 0.0337},
    {4, 0, 0.010, 0.0516, 0.0568},  {4, 0, 0.005, 0.0563, 0.0615},  {4, 0, 0.001, 0.0602, 0.0653},
    {4, 1, 0.010, 0.0262, 0.0266},  {4, 1, 0.005, 0.0307, 0.0308},  {4, 1, 0.001, 0.0345, 0.0346},
    {4, 2, 0.010, 0.0167, 0.0165},  {4, 2, 0.005, 0.0210, 0.0204},  {4, 2, 0.001, 0.0248, 0.0241},
    {4, 3, 0.010, 0.0109, 0.0116},  {4, 3, 0.005, 0.0149, 0.0153},  {4, 3, 0.001, 0.0187, 0.0189},
    {5, 0, 0.010, 0.0317, 0.0355},  {5, 0, 0.005, 0.0362, 0.0399},  {5, 0, 0.001, 0.0401, 0.0437},
    {6, 0, 0.010, 0.0203, 0.0231},  {6, 0, 0.005, 0.0247, 0.0273},  {6, 0, 0.001, 0.0285, 0.0311},
    {7, 0, 0.010, 0.0133, 0.0154},  {7, 0, 0.005, 0.0174, 0.0194},  {7, 0, 0.001, 0.0211, 0.0231},
}};

/// Schroedinger table: (n, l, a, approx, numeric).
inline constexpr std::array<Entry, entries_per_table> table2{{
    {1, 0, 0.010, 0.2926, 0.2944},  {1, 0, 0.005, 0.3025, 0.3019},  {1, 0, 0.001, 0.3105, 0.3103},
    {2, 0, 0.010, 0.1191, 0.1229},  {2, 0, 0.005, 0.1289, 0.1287},  {2, 0, 0.001, 0.1369, 0.1342},
    {2, 1, 0.010, 0.0584, 0.0577},  {2, 1, 0.005, 0.0682, 0.0684},  {2, 1, 0.001, 0.0761, 0.0762},
    {3, 0, 0.010, 0.0584, 0.0680},  {3, 0, 0.005, 0.0682, 0.0731},  {3, 0, 0.001, 0.0761, 0.0778},
    {3, 1, 0.010, 0.0305, 0.0334},  {3, 1, 0.005, 0.0401, 0.0413},  {3, 1, 0.001, 0.0480, 0.0475},
    {3, 2, 0.010, 0.0154, 0.0155},  {3, 2, 0.005, 0.0249, 0.0242},  {3, 2, 0.001, 0.0327, 0.0320},
    {4, 0, 0.010, 0.0305, 0.0419},  {4, 0, 0.005, 0.0401, 0.0467},  {4, 0, 0.001, 0.0480, 0.0509},
    {4, 1, 0.010, 0.0154, 0.0214},  {4, 1, 0.005, 0.0249, 0.0277},  {4, 1, 0.001, 0.0327, 0.0330},
    {4, 2, 0.010, 0.0065, 0.0095},  {4, 2, 0.005, 0.0157, 0.0165},  {4, 2, 0.001, 0.0235, 0.0229},
    {4, 3, 0.010, 0.0008, 0.0010},  {4, 3, 0.005, 0.0098, 0.0099},  {4, 3, 0.001, 0.0175, 0.0178},
    {5, 0, 0.010, 0.0154, 0.0274},  {5, 0, 0.005, 0.0249, 0.0318},  {5, 0, 0.001, 0.0327, 0.0359},
    {6, 0, 0.010, 0.0065, 0.0084},  {6, 0, 0.005, 0.0157, 0.0226},  {6, 0, 0.001, 0.0235, 0.0264},
    {7, 0, 0.010, 0.0008, 0.00105}, {7, 0, 0.005, 0.00985, 0.0165}, {7, 0, 0.001, 0.0175, 0.0202},
}};

inline constexpr const std::array<Entry, entries_per_table>& table(int which) {
    return which == 1 ? table1 : table2;
}

/// Percentage errors |E_approx - E_num|/|E_num| quoted in the source text
/// for the lowest semirelativistic states.
struct QuotedPct {
    int n;
    int l;
    double a;
    double pct;
};

inline constexpr std::array<QuotedPct, 12> quoted_percent_errors{{
    {1, 0, 0.001, 0.0454}, {2, 0, 0.001, 3.403}, {2, 1, 0.001, 0.866},
    {3, 0, 0.001, 6.478},  {3, 1, 0.001, 0.936}, {3, 2, 0.001, 1.292},
    {1, 0, 0.010, 0.269},  {2, 0, 0.010, 3.598}, {2, 1, 0.010, 1.238},
    {3, 0, 0.010, 7.206},  {3, 1, 0.010, 0.596}, {3, 2, 0.010, 0.150},
}};

/// Default parameter set the tables were produced with.
inline constexpr double default_m1 = 5.0;
inline constexpr double default_m2 = 5.0;
inline constexpr double default_V0 = 1.0;
inline constexpr std::array<double, 3> screening_values{0.01, 0.005, 0.001};

} // namespace yukawa::golden
