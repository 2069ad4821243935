#pragma once

#include <cstdio>
#include <string>

#include "hypell/verify.hpp"

namespace hypell {

/// Round-trippable rendering of a double: 17 significant digits.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace detail

/// Fixed schema: {version, grid, checks: [{id, a, kappa, mode, max_residual,
/// tolerance, pass}], notes}; checks arrive already sorted by (id, a, kappa).
/// Byte-deterministic for fixed inputs (the timestamp is not serialized).
inline std::string to_json(const VerificationReport& rep) {
    std::string out = "{\n";
    out += "  \"version\": \"" + detail::json_escape(rep.version) + "\",\n";
    out += "  \"grid\": {\n    \"a\": [";
    for (std::size_t i = 0; i < rep.config.a_grid.size(); ++i) {
        if (i) out += ",";
        out += "\"" + detail::json_escape(rep.config.a_grid[i].str()) + "\"";
    }
    out += "],\n    \"kappa\": [";
    for (std::size_t i = 0; i < rep.config.kappa_grid.size(); ++i) {
        if (i) out += ",";
        out += format_double(rep.config.kappa_grid[i]);
    }
    out += "],\n    \"order\": " + std::to_string(rep.config.order) + ",\n";
    out += "    \"tol_series\": " + format_double(rep.config.tol.series) + ",\n";
    out += "    \"tol_pointwise\": " + format_double(rep.config.tol.pointwise) + "\n  },\n";
    out += "  \"checks\": [\n";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const TheoremCheck& c = rep.checks[i];
        out += "    {\"id\": \"" + detail::json_escape(c.id) + "\", \"a\": \"" +
               detail::json_escape(c.a) + "\", \"kappa\": " + format_double(c.kappa) +
               ", \"mode\": \"" + to_string(c.mode) + "\", \"max_residual\": " +
               format_double(c.max_residual) + ", \"tolerance\": " + format_double(c.tolerance) +
               ", \"pass\": " + (c.pass ? "true" : "false") + "}";
        if (i + 1 < rep.checks.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n  \"notes\": [";
    for (std::size_t i = 0; i < rep.notes.size(); ++i) {
        if (i) out += ",";
        out += "\n    \"" + detail::json_escape(rep.notes[i]) + "\"";
    }
    if (!rep.notes.empty()) out += "\n  ";
    out += "]\n}\n";
    return out;
}

/// RFC-4180 CSV with the fixed header id,a,kappa,mode,max_residual,tolerance,pass.
inline std::string to_csv(const VerificationReport& rep) {
    std::string out = "id,a,kappa,mode,max_residual,tolerance,pass\n";
    for (const TheoremCheck& c : rep.checks) {
        out += detail::csv_field(c.id) + "," + detail::csv_field(c.a) + "," +
               format_double(c.kappa) + "," + to_string(c.mode) + "," +
               format_double(c.max_residual) + "," + format_double(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

/// Human-readable rendering; identical content to the JSON form. The
/// timestamp appears only here, on a comment line.
inline std::string to_text(const VerificationReport& rep) {
    std::string out = "# verification report\n";
    out += "# version: " + rep.version + "\n";
    if (!rep.timestamp.empty()) out += "# generated: " + rep.timestamp + "\n";
    out += "# grid: a =";
    for (const Rational& a : rep.config.a_grid) out += " " + a.str();
    out += "; kappa =";
    for (double k : rep.config.kappa_grid) out += " " + format_double(k);
    out += "; order = " + std::to_string(rep.config.order) + "\n";
    out += "# tolerances: series = " + format_double(rep.config.tol.series) +
           "; pointwise = " + format_double(rep.config.tol.pointwise) + "; exact = 0\n";
    std::size_t passed = 0;
    for (const TheoremCheck& c : rep.checks) {
        if (c.pass) ++passed;
        out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.id + " a=" + c.a +
               " kappa=" + format_double(c.kappa) + " mode=" + to_string(c.mode) +
               " max_residual=" + format_double(c.max_residual) +
               " tolerance=" + format_double(c.tolerance) + "\n";
    }
    out += "# checks passed: " + std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + "\n";
    for (const std::string& note : rep.notes) out += "# note: " + note + "\n";
    return out;
}

}  // namespace hypell
