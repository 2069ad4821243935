// Command-line front end: evaluate analogue functions, dump series
// coefficients, and run the identity verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config/domain error.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypell/hypell.hpp"

namespace {

using hypell::AnalogueFn;
using hypell::AnalogueSet;
using hypell::Complex;
using hypell::format_double;
using hypell::ModulusParams;
using hypell::Rational;

struct CommonOpts {
    std::string a = "1/4";
    double kappa = 0.8;
    int order = 32;
    std::string format = "text";
    std::string output;
};

void write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << payload;
}

Complex parse_complex(const std::string& text) {
    const std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
        return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("expected u as 're' or 're,im', got '" + text + "'");
    }
}

struct EvalRecord {
    std::string function;
    std::string a;
    double kappa;
    Complex u;
    Complex value;
    std::optional<double> oracle_value;
    std::optional<double> abs_diff;
};

std::string render_eval(const EvalRecord& r, const std::string& format) {
    if (format == "json") {
        std::string out = "{\"function\": \"" + r.function + "\", \"a\": \"" + r.a +
                          "\", \"kappa\": " + format_double(r.kappa) +
                          ", \"u_re\": " + format_double(r.u.real()) +
                          ", \"u_im\": " + format_double(r.u.imag()) +
                          ", \"value_re\": " + format_double(r.value.real()) +
                          ", \"value_im\": " + format_double(r.value.imag());
        if (r.oracle_value)
            out += ", \"oracle_value\": " + format_double(*r.oracle_value) +
                   ", \"abs_diff\": " + format_double(*r.abs_diff);
        return out + "}\n";
    }
    if (format == "csv") {
        std::string out = "function,a,kappa,u_re,u_im,value_re,value_im,oracle_value,abs_diff\n";
        out += r.function + "," + r.a + "," + format_double(r.kappa) + "," +
               format_double(r.u.real()) + "," + format_double(r.u.imag()) + "," +
               format_double(r.value.real()) + "," + format_double(r.value.imag()) + ",";
        if (r.oracle_value) out += format_double(*r.oracle_value);
        out += ",";
        if (r.abs_diff) out += format_double(*r.abs_diff);
        return out + "\n";
    }
    std::string out;
    out += "function = " + r.function + "\n";
    out += "a = " + r.a + "\n";
    out += "kappa = " + format_double(r.kappa) + "\n";
    out += "u = " + format_double(r.u.real()) + " " + format_double(r.u.imag()) + "\n";
    out += "value_re = " + format_double(r.value.real()) + "\n";
    out += "value_im = " + format_double(r.value.imag()) + "\n";
    if (r.oracle_value) {
        out += "oracle_value = " + format_double(*r.oracle_value) + "\n";
        out += "abs_diff = " + format_double(*r.abs_diff) + "\n";
    }
    return out;
}

int cmd_eval(const CommonOpts& opts, const std::string& fn_name, const std::string& u_text) {
    const ModulusParams params(Rational::parse(opts.a), opts.kappa);
    const AnalogueFn fn = hypell::analogue_fn_from_string(fn_name);
    const Complex u = parse_complex(u_text);
    const AnalogueSet set = AnalogueSet::build(params, opts.order);

    EvalRecord rec{fn_name, params.a.str(), params.kappa, u, set.eval(fn, u), {}, {}};
    if (fn == AnalogueFn::phi && u.imag() == 0.0) {
        rec.oracle_value = hypell::phi_oracle(params, u.real());
        rec.abs_diff = std::abs(rec.value - Complex(*rec.oracle_value));
    }
    write_out(opts.output, render_eval(rec, opts.format));
    return 0;
}

int cmd_series(const CommonOpts& opts, const std::string& fn_name) {
    const ModulusParams params(Rational::parse(opts.a), opts.kappa);
    const AnalogueFn fn = hypell::analogue_fn_from_string(fn_name);
    const AnalogueSet set = AnalogueSet::build(params, opts.order);
    const hypell::TruncatedSeries& s = set.series(fn);

    std::string out;
    if (opts.format == "json") {
        out = "{\"function\": \"" + fn_name + "\", \"a\": \"" + params.a.str() +
              "\", \"kappa\": " + format_double(params.kappa) +
              ", \"order\": " + std::to_string(s.order()) + ", \"coefficients\": [\n";
        for (int k = 0; k <= s.order(); ++k) {
            out += "  {\"k\": " + std::to_string(k) + ", \"re\": " + format_double(s[k].real()) +
                   ", \"im\": " + format_double(s[k].imag()) + "}";
            if (k < s.order()) out += ",";
            out += "\n";
        }
        out += "]}\n";
    } else if (opts.format == "csv") {
        out = "k,re,im\n";
        for (int k = 0; k <= s.order(); ++k)
            out += std::to_string(k) + "," + format_double(s[k].real()) + "," +
                   format_double(s[k].imag()) + "\n";
    } else {
        out = "# " + fn_name + " a=" + params.a.str() + " kappa=" + format_double(params.kappa) +
              " order=" + std::to_string(s.order()) + "\n";
        for (int k = 0; k <= s.order(); ++k)
            out += std::to_string(k) + " " + format_double(s[k].real()) + " " +
                   format_double(s[k].imag()) + "\n";
    }
    write_out(opts.output, out);
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::vector<std::string>& a_list,
               const std::vector<double>& kappa_list, double tol_series, double tol_pointwise) {
    hypell::SuiteConfig cfg = hypell::SuiteConfig::defaults();
    if (!a_list.empty()) {
        cfg.a_grid.clear();
        for (const std::string& text : a_list) cfg.a_grid.push_back(Rational::parse(text));
    }
    if (!kappa_list.empty()) cfg.kappa_grid = kappa_list;
    cfg.order = opts.order;
    if (tol_series < 0.0 || tol_pointwise < 0.0)
        throw std::domain_error("tolerances must be >= 0");
    cfg.tol.series = tol_series;
    cfg.tol.pointwise = tol_pointwise;
    for (const Rational& a : cfg.a_grid)
        for (double kappa : cfg.kappa_grid) ModulusParams(a, kappa);  // reject bad params up front

    const hypell::VerificationReport rep = hypell::run_suite(cfg);
    std::string payload;
    if (opts.format == "json")
        payload = hypell::to_json(rep);
    else if (opts.format == "csv")
        payload = hypell::to_csv(rep);
    else
        payload = hypell::to_text(rep);
    write_out(opts.output, payload);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi-style elliptic-function analogues from incomplete hypergeometric "
                 "integrals: evaluation, series dumps, identity verification"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string fn_name = "d";
    std::string u_text = "0";
    std::vector<std::string> a_list;
    std::vector<double> kappa_list;
    double tol_series = 1e-10;
    double tol_pointwise = 1e-9;

    const auto add_common = [&](CLI::App* sub, bool with_params) {
        if (with_params) {
            sub->add_option("--a", opts.a, "parameter a as a rational p/q (e.g. 1/6; 0 is classical)");
            sub->add_option("--kappa", opts.kappa, "modulus kappa in (0,1)");
        }
        sub->add_option("--order", opts.order, "truncation order of all series");
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output", opts.output, "write output to this file instead of stdout");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one analogue function at a point u");
    eval->add_option("--fn", fn_name, "function: phi|psi|s|c|d|partial|nabla|delta")->required();
    eval->add_option("--u", u_text, "evaluation point 're' or 're,im'")->required();
    add_common(eval, true);

    CLI::App* series = app.add_subcommand("series", "dump Maclaurin coefficients of one function");
    series->add_option("--fn", fn_name, "function: phi|psi|s|c|d|partial|nabla|delta")->required();
    add_common(series, true);

    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--a", a_list, "grid of a values (repeatable; default grid if omitted)");
    verify->add_option("--kappa", kappa_list, "grid of kappa values (repeatable)");
    verify->add_option("--tol-series", tol_series, "tolerance for coefficientwise checks");
    verify->add_option("--tol-pointwise", tol_pointwise, "tolerance for pointwise checks");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(opts, fn_name, u_text);
        if (app.got_subcommand(series)) return cmd_series(opts, fn_name);
        return cmd_verify(opts, a_list, kappa_list, tol_series, tol_pointwise);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
