#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "yukawa/errors.hpp"
#include "yukawa/model.hpp"

namespace yukawa {

/// Double formatted to 9 significant digits (CSV and report convention).
inline std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Optional overrides read from a key=value parameter file.
struct ParamsFileValues {
    std::optional<double> m1, m2, V0, a, hbar;

    void apply(PhysicalParams& p) const {
        if (m1) p.m1 = *m1;
        if (m2) p.m2 = *m2;
        if (V0) p.V0 = *V0;
        if (a) p.a = *a;
        if (hbar) p.hbar = *hbar;
    }
};

/// Parse a plain key=value file: one pair per line, '#' starts a comment,
/// blank lines ignored.  Keys: m1, m2, V0, a, hbar.
inline ParamsFileValues parse_params_text(std::istream& in) {
    ParamsFileValues out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parameter_error("params file line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        const auto kb = key.find_last_not_of(" \t");
        key = key.substr(0, kb + 1);
        const auto vb = val.find_first_not_of(" \t");
        if (vb == std::string::npos)
            throw parameter_error("params file line " + std::to_string(lineno) + ": empty value");
        val = val.substr(vb);

        double x;
        try {
            size_t pos = 0;
            x = std::stod(val, &pos);
            while (pos < val.size() && (val[pos] == ' ' || val[pos] == '\t')) ++pos;
            if (pos != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw parameter_error("params file line " + std::to_string(lineno) + ": bad number '" + val + "'");
        }

        if (key == "m1") out.m1 = x;
        else if (key == "m2") out.m2 = x;
        else if (key == "V0") out.V0 = x;
        else if (key == "a") out.a = x;
        else if (key == "hbar") out.hbar = x;
        else throw parameter_error("params file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return out;
}

inline ParamsFileValues load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open params file: " + path);
    return parse_params_text(in);
}

} // namespace yukawa
