#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "stieltjes/verify.hpp"

using namespace sc;
using namespace sc::verify;

// In-test Euler constant oracle (harmonic limit).
static long double gamma_em_oracle() {
    const long N = 200000;
    long double h = 0.0L;
    for (long n = N; n >= 1; --n) h += 1.0L / n;
    const long double Nl = static_cast<long double>(N);
    return h - std::log(Nl) - 1.0L / (2.0L * Nl) + 1.0L / (12.0L * Nl * Nl);
}

// In-test zeta(3) oracle: direct sum plus Euler-Maclaurin tail.
static long double zeta3_oracle() {
    const long N = 20000;
    long double s = 0.0L;
    for (long n = N; n >= 1; --n) s += 1.0L / (static_cast<long double>(n) * n * n);
    const long double Nl = static_cast<long double>(N);
    return s + 1.0L / (2.0L * Nl * Nl) - 0.5L / (Nl * Nl * Nl) + 0.25L / (Nl * Nl * Nl * Nl);
}

TEST_CASE("the exact s = 0 mean-value case passes with near-zero residual") {
    auto r = run_check("P4", {{"s", 0.0}}, 1e-8);
    CHECK(r.pass);
    CHECK(r.abs_residual < 1e-12);
}

TEST_CASE("rational-argument sum at q = 2, k = 0 equals gamma + 2 ln 2") {
    auto r = run_check("P3", {{"q", 2}, {"k", 0}}, 1e-11);
    CHECK(r.pass);
    const double want = static_cast<double>(gamma_em_oracle()) + 2.0 * std::log(2.0);
    CHECK(r.lhs == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("zeta-derivative identity at n = 1 and its independent value") {
    auto r = run_check("E16", {{"n", 1}}, 1e-8);
    CHECK(r.pass);
    // rhs rebuilt in-test: -2! zeta(3) / (2 (2 pi)^2)
    const double want = -2.0 * static_cast<double>(zeta3_oracle()) /
                        (2.0 * std::pow(2.0 * M_PI, 2));
    CHECK(r.lhs == doctest::Approx(want).epsilon(1e-9));
    // "P8f" is accepted as an alias.
    auto r2 = run_check("P8f", {{"n", 1}}, 1e-8);
    CHECK(r2.pass);
}

TEST_CASE("Euler-constant series converges monotonically in the term count") {
    auto r26 = run_check("P8a", {{"terms", 26}}, 1.0);
    auto r52 = run_check("P8a", {{"terms", 52}}, 1.0);
    // One ulp of slack: at these term counts both residuals sit at the
    // double rounding floor and can differ by a final-rounding coin flip.
    CHECK(r52.abs_residual <= r26.abs_residual + 2e-16);
    CHECK(r52.abs_residual <= 5e-15);
}

TEST_CASE("derivative-series truncation: K = 30 to 40 moves less than the tail bound") {
    // The j = 1 series terms decay like C(k+1,1) 3^{-k}; the K = 30..40 block
    // must be far below the verification tolerance.
    const double a = 0.5;
    auto g = stieltjes::gamma_oracle_range(40, a, 1e-10);
    double block = 0.0;
    double kfac = 1.0;
    for (int k = 1; k <= 40; ++k) {
        kfac *= k;
        if (k > 30) block += (k + 1) * std::fabs(g[static_cast<std::size_t>(k)].value) / kfac;
    }
    CHECK(block < 1e-12);
}

TEST_CASE("check routes are independent by construction") {
    // The report metadata must name different methods on the two sides.
    for (const char* id : {"P3", "D", "X17", "HP", "A1"}) {
        auto cases = default_cases(id);
        REQUIRE(!cases.empty());
        auto r = run_check(id, cases.front().params, cases.front().fast_tol);
        CHECK(r.lhs_route != r.rhs_route);
        CHECK(!r.lhs_route.empty());
        CHECK(!r.rhs_route.empty());
    }
}

TEST_CASE("convergence failures annotate the report instead of crashing") {
    // Five outer terms cannot reach 5e-15; the underlying series throws and
    // the runner converts that into pass = false plus a note.
    auto r = run_check("P8a", {{"terms", 5}}, 5e-15);
    CHECK(!r.pass);
    CHECK(r.note.find("convergence") != std::string::npos);
}

TEST_CASE("unknown ids and profiles are usage errors") {
    CHECK_THROWS_AS(run_check("NOPE", {}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(run_suite({"P4"}, "medium"), std::domain_error);
}

TEST_CASE("suite runs preserve canonical ordering under parallelism") {
    auto reports = run_suite({"D", "P4"}, "fast", 4);
    REQUIRE(reports.size() == default_cases("D").size() + default_cases("P4").size());
    for (std::size_t i = 0; i < default_cases("D").size(); ++i)
        CHECK(reports[i].identity_id == "D");
    for (std::size_t i = default_cases("D").size(); i < reports.size(); ++i)
        CHECK(reports[i].identity_id == "P4");
    for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("catalog is complete and every id has default cases") {
    const auto& ids = catalog_ids();
    CHECK(ids.size() == 18);
    for (const auto& id : ids) CHECK(!default_cases(id).empty());
}
