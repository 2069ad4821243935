#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypell/report.hpp"
#include "hypell/verify.hpp"

using hypell::AnalogueSet;
using hypell::CheckMode;
using hypell::ModulusParams;
using hypell::Rational;
using hypell::SuiteConfig;
using hypell::TheoremCheck;
using hypell::VerificationReport;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.a_grid = {Rational(1, 4), Rational(1, 3)};
    cfg.kappa_grid = {0.6};
    cfg.order = 24;
    return cfg;
}

}  // namespace

TEST_CASE("individual theorem checks pass on a healthy set") {
    const AnalogueSet even_set = AnalogueSet::build(ModulusParams(Rational(1, 6), 0.8), 32);
    const AnalogueSet odd_set = AnalogueSet::build(ModulusParams(Rational(1, 3), 0.8), 32);
    const double tol = 1e-10;

    CHECK(hypell::check_thm1(even_set, tol).pass);
    CHECK(hypell::check_psi_prime(even_set, tol).pass);
    for (const auto& c : hypell::check_thm2(even_set, tol)) CHECK(c.pass);
    for (const auto& c : hypell::check_local_relations(even_set, tol)) CHECK(c.pass);
    for (const auto& c : hypell::check_square_odes(even_set, tol)) CHECK(c.pass);
    CHECK(hypell::check_thm3_even(even_set, tol).pass);
    for (const auto& c : hypell::check_thm4_thm5_even(even_set, tol)) CHECK(c.pass);
    CHECK(hypell::check_remark_delta_vm(even_set, tol).pass);  // n = 3 = 2*1+1
    for (const auto& c : hypell::check_thm7_8_9_odd(odd_set, tol)) CHECK(c.pass);

    CHECK_THROWS_AS(hypell::check_thm3_even(odd_set, tol), std::invalid_argument);
    CHECK_THROWS_AS(hypell::check_thm7_8_9_odd(even_set, tol), std::invalid_argument);
    // remark needs 1/a = 2n with n odd; a = 1/4 has n = 2
    const AnalogueSet sig4 = AnalogueSet::build(ModulusParams(Rational(1, 4), 0.8), 16);
    CHECK_THROWS_AS(hypell::check_remark_delta_vm(sig4, tol), std::invalid_argument);
}

TEST_CASE("simple-zero substitution values") {
    CHECK(hypell::check_simple_zero_values(2, Rational(1, 4)).pass);
    CHECK(hypell::check_simple_zero_values(3, Rational(1, 4)).pass);
    for (int n = 2; n <= 9; ++n)
        for (const Rational& lam2 : {Rational(1, 4), Rational(3, 7), Rational(9, 10)})
            CHECK(hypell::check_simple_zero_values(n, lam2).pass);

    // the stated numbers: n = 2 gives 3/4, n = 3 gives -1/9 at lambda^2 = 1/4
    using hypell::s_n_poly;
    CHECK(Rational(4, 4) * (s_n_poly(2)(Rational(0)) - Rational(1, 4)) == Rational(3, 4));
    CHECK(Rational(4, 9) * (s_n_poly(3)(Rational(0)) - Rational(1, 4)) == Rational(-1, 9));
}

TEST_CASE("polar arithmetic enumeration and exact facts") {
    CHECK(hypell::check_polar_arithmetic().pass);
    for (const auto& c : hypell::exact_polynomial_checks()) {
        CAPTURE(c.id);
        CHECK(c.mode == CheckMode::exact);
        CHECK(c.max_residual == 0.0);
        CHECK(c.pass);
    }
}

TEST_CASE("closed-form check group passes") {
    for (const auto& c : hypell::check_sig3_sig4_closed_forms(0.8, hypell::Tolerances{}, 32)) {
        CAPTURE(c.id);
        CHECK(c.pass);
    }
}

TEST_CASE("run_suite: reduced grid passes, report is ordered and complete") {
    const VerificationReport rep = hypell::run_suite(small_config());
    CHECK(rep.all_pass());
    CHECK(rep.version == hypell::kToolVersion);
    CHECK(!rep.checks.empty());
    CHECK(!rep.notes.empty());
    CHECK(!rep.timestamp.empty());

    std::set<std::string> keys;
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const TheoremCheck& c = rep.checks[i];
        CHECK(keys.insert(c.id + "|" + c.a + "|" + hypell::format_double(c.kappa)).second);
        if (i > 0) {
            const TheoremCheck& prev = rep.checks[i - 1];
            const bool ordered = prev.id < c.id || (prev.id == c.id && prev.a < c.a) ||
                                 (prev.id == c.id && prev.a == c.a && prev.kappa <= c.kappa);
            CHECK(ordered);
        }
    }

    // both parities must have produced their family-specific checks
    bool saw_even = false, saw_odd = false;
    for (const auto& c : rep.checks) {
        saw_even = saw_even || c.id == "thm5_nabla_ode";
        saw_odd = saw_odd || c.id == "thm9_nabla_ode";
    }
    CHECK(saw_even);
    CHECK(saw_odd);
}

TEST_CASE("run_suite: zero tolerance forces failures; exact checks survive") {
    SuiteConfig cfg = small_config();
    cfg.tol.series = 0.0;
    cfg.tol.pointwise = 0.0;
    const VerificationReport rep = hypell::run_suite(cfg);
    CHECK(!rep.all_pass());
    bool exact_all_pass = true;
    for (const auto& c : rep.checks)
        if (c.mode == CheckMode::exact) exact_all_pass = exact_all_pass && c.pass;
    CHECK(exact_all_pass);
}

TEST_CASE("run_suite: n = 1 runs but is flagged") {
    SuiteConfig cfg = small_config();
    cfg.a_grid = {Rational(1)};
    const VerificationReport rep = hypell::run_suite(cfg);
    CHECK(rep.all_pass());
    bool saw_odd = false;
    for (const auto& c : rep.checks) saw_odd = saw_odd || c.id == "thm9_nabla_ode";
    CHECK(saw_odd);
    bool flagged = false;
    for (const auto& note : rep.notes)
        flagged = flagged || note.find("a = 1 (n = 1)") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("run_suite: intractable polynomial families are skipped with a note") {
    SuiteConfig cfg = small_config();
    cfg.a_grid = {Rational(1, 200)};
    const VerificationReport rep = hypell::run_suite(cfg);
    CHECK(rep.all_pass());  // the analytic checks still run and pass
    for (const auto& c : rep.checks) CHECK(c.id != "thm5_nabla_ode");
    bool noted = false;
    for (const auto& note : rep.notes)
        noted = noted || note.find("polynomial-family checks skipped") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("run_suite: builder failures are recorded, not thrown") {
    SuiteConfig cfg = small_config();
    cfg.order = 2;  // below the minimum build order
    const VerificationReport rep = hypell::run_suite(cfg);
    CHECK(!rep.all_pass());
    bool saw_build_error = false;
    for (const auto& c : rep.checks)
        saw_build_error = saw_build_error || c.id == "build_error" || c.id == "closed_forms_build_error";
    CHECK(saw_build_error);
}

TEST_CASE("JSON serialization: schema, determinism, parseability") {
    const VerificationReport rep = hypell::run_suite(small_config());
    const std::string payload = hypell::to_json(rep);

    const auto parsed = nlohmann::json::parse(payload);
    REQUIRE(parsed.is_object());
    CHECK(parsed.contains("version"));
    CHECK(parsed.contains("grid"));
    CHECK(parsed.contains("checks"));
    CHECK(parsed.contains("notes"));
    CHECK(parsed["version"].get<std::string>() == hypell::kToolVersion);
    CHECK(parsed["grid"]["order"].get<int>() == 24);
    CHECK(parsed["grid"]["a"].size() == 2);
    REQUIRE(parsed["checks"].is_array());
    REQUIRE(parsed["checks"].size() == rep.checks.size());
    for (const auto& c : parsed["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("a"));
        CHECK(c.contains("kappa"));
        CHECK(c.contains("mode"));
        CHECK(c.contains("max_residual"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
        CHECK(c.size() == 7);
    }

    // a second run differs only in its timestamp, which the JSON form omits
    VerificationReport again = hypell::run_suite(small_config());
    again.timestamp = "someone else";
    CHECK(hypell::to_json(again) == payload);
}

TEST_CASE("CSV and text renderings carry the same content as JSON") {
    const VerificationReport rep = hypell::run_suite(small_config());

    const std::string csv = hypell::to_csv(rep);
    CHECK(csv.rfind("id,a,kappa,mode,max_residual,tolerance,pass\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == rep.checks.size() + 1);

    const std::string text = hypell::to_text(rep);
    const auto parsed = nlohmann::json::parse(hypell::to_json(rep));
    for (const auto& c : parsed["checks"]) {
        const std::string line = std::string(c["pass"].get<bool>() ? "PASS" : "FAIL") + " " +
                                 c["id"].get<std::string>() + " a=" + c["a"].get<std::string>();
        CHECK(text.find(line) != std::string::npos);
    }
    CHECK(text.find("# generated: ") != std::string::npos);
}

TEST_CASE("text rendering is byte-identical across runs once the timestamp line is dropped") {
    const auto strip_generated = [](const std::string& text) {
        std::string out;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (line.rfind("# generated:", 0) != 0) out += line + "\n";
        return out;
    };
    const std::string first = hypell::to_text(hypell::run_suite(small_config()));
    const std::string second = hypell::to_text(hypell::run_suite(small_config()));
    CHECK(strip_generated(first) == strip_generated(second));

    const std::string csv1 = hypell::to_csv(hypell::run_suite(small_config()));
    const std::string csv2 = hypell::to_csv(hypell::run_suite(small_config()));
    CHECK(csv1 == csv2);
}

TEST_CASE("format_double renders round-trippable doubles") {
    CHECK(hypell::format_double(0.0) == "0");
    CHECK(hypell::format_double(1e-10) == "1e-10");
    CHECK(hypell::format_double(0.3) == "0.29999999999999999");
    for (const double v : {0.1 + 0.2, 1.0 / 3.0, 6912.0, -2.5e-17})
        CHECK(std::stod(hypell::format_double(v)) == v);
}
