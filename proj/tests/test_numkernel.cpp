#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "stieltjes/numkernel.hpp"

using namespace sc;
using namespace sc::kernel;

TEST_CASE("signed Stirling numbers satisfy the falling-factorial identity") {
    // sum_m s(n,m) x^m = x(x-1)...(x-n+1), checked exactly at integer points.
    for (int n = 1; n <= 20; ++n) {
        for (long x : {2L, 5L, 9L}) {
            BigInt lhs = 0, xp = 1;
            for (int m = 0; m <= n; ++m) {
                lhs += stirling_s1(n, m) * xp;
                xp *= x;
            }
            BigInt rhs = 1;
            for (int i = 0; i < n; ++i) rhs *= (x - i);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Stirling triangle boundary values") {
    CHECK(stirling_s1(0, 0) == 1);
    CHECK(stirling_s1(5, 0) == 0);
    CHECK(stirling_s1(7, 7) == 1);
    // s(n,1) = (-1)^{n-1} (n-1)!
    for (int n = 1; n <= 10; ++n) {
        BigInt expect = factorial(n - 1);
        if (n % 2 == 0) expect = -expect;
        CHECK(stirling_s1(n, 1) == expect);
    }
}

TEST_CASE("binomial satisfies the Pascal recurrence and symmetry") {
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
}

TEST_CASE("Bernoulli numbers reproduce Faulhaber power sums exactly") {
    // sum_{i=1}^{N} i^p = 1/(p+1) sum_j C(p+1,j) B_j N^{p+1-j} with B_1 = -1/2
    // convention absorbed by adding N^p.
    for (int p : {1, 2, 4, 6, 10}) {
        const long N = 23;
        BigInt direct = 0;
        for (long i = 1; i <= N; ++i) {
            BigInt ip = 1;
            for (int t = 0; t < p; ++t) ip *= i;
            direct += ip;
        }
        BigRat faul = 0;
        for (int j = 0; j <= p; ++j) {
            BigInt Np = 1;
            for (int t = 0; t < p + 1 - j; ++t) Np *= N;
            faul += BigRat(binomial(p + 1, j)) * bernoulli_number(j) * BigRat(Np);
        }
        faul /= BigRat(p + 1);
        BigInt Npow = 1;
        for (int t = 0; t < p; ++t) Npow *= N;
        faul += BigRat(Npow);  // B_1 = -1/2 convention
        CHECK(faul == BigRat(direct));
    }
}

TEST_CASE("odd Bernoulli numbers vanish beyond B_1") {
    for (int n = 3; n <= 15; n += 2) CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("Bernoulli polynomials: difference and reflection identities") {
    for (int n = 1; n <= 8; ++n) {
        for (double x : {0.1, 0.37, 0.82}) {
            const double diff = bernoulli_poly(n, x + 1.0) - bernoulli_poly(n, x);
            CHECK(diff == doctest::Approx(n * std::pow(x, n - 1)).epsilon(1e-12));
            const double refl = bernoulli_poly(n, 1.0 - x);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(refl == doctest::Approx(sign * bernoulli_poly(n, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("periodic extension has period 1 and matches the polynomial on (0,1)") {
    for (int n = 1; n <= 6; ++n)
        for (double x : {0.125, 0.5, 0.93}) {
            CHECK(periodic_bernoulli(n, x) == doctest::Approx(bernoulli_poly(n, x)).epsilon(1e-14));
            CHECK(periodic_bernoulli(n, x + 3.0) ==
                  doctest::Approx(periodic_bernoulli(n, x)).epsilon(1e-13));
        }
    CHECK(periodic_bernoulli(1, 0.25) == doctest::Approx(-0.25));
}

TEST_CASE("periodic-Bernoulli sup bound dominates a dense sample") {
    for (int n = 1; n <= 9; ++n) {
        const double bound = pn_sup_bound(n);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i)
            worst = std::max(worst, std::fabs(periodic_bernoulli(n, i / 2000.0)));
        CHECK(worst <= bound);
    }
}

static double simpson(double (*f)(double), double lo, double hi, int n) {
    const double h = (hi - lo) / n;
    double s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
    return s * h / 3.0;
}

TEST_CASE("upper incomplete gamma versus a direct Simpson oracle") {
    // Gamma(3,1) = int_1^inf t^2 e^-t dt; the integrand below 1e-18 past t=60.
    auto integrand = +[](double t) { return t * t * std::exp(-t); };
    const double oracle = simpson(integrand, 1.0, 60.0, 20000);
    const double v = upper_incomplete_gamma(3.0, 1.0).value;
    CHECK(v == doctest::Approx(oracle).epsilon(1e-12));
    // Closed form for integer a: Gamma(3,1) = e^{-1}(1 + 1 + 2/2! ...) = 5/e.
    CHECK(v == doctest::Approx(5.0 / std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("compensated accumulation survives catastrophic cancellation") {
    CompensatedAccumulator acc;
    acc.add(1e16);
    acc.add(1.0);
    acc.add(-1e16);
    CHECK(acc.result() == 1.0);

    // Summing 10^6 copies of 0.1 in plain doubles drifts by ~1e-9; the
    // compensated result must match the exact rational scaled down.
    CompensatedAccumulator b;
    for (int i = 0; i < 1000000; ++i) b.add(0.1);
    CHECK(std::fabs(b.result() - 100000.0) < 1e-9);
}
