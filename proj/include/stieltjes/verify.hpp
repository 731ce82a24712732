#ifndef STIELTJES_VERIFY_HPP
#define STIELTJES_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stieltjes/numkernel.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/zetacore.hpp"

// Identity checkers: every verifiable statement gets one entry in the catalog
// below.  Each checker evaluates the two sides of its identity by maximally
// independent routes (documented in lhs_route / rhs_route) and reports both
// values, the residual, and pass/fail against a per-check tolerance.

namespace sc::verify {

struct VerificationReport {
    std::string identity_id;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool relative = false;  // pass judged on rel_residual instead of abs
    long terms_or_panels = 0;
    double elapsed_ms = 0.0;
    std::string lhs_route;
    std::string rhs_route;
    std::string note;  // convergence-failure annotation, if any
};

using Params = std::map<std::string, double>;

namespace detail {

inline void finish(VerificationReport& r) {
    r.abs_residual = std::fabs(r.lhs - r.rhs);
    const double scale = std::max(std::fabs(r.lhs), std::fabs(r.rhs));
    r.rel_residual = scale > 0.0 ? r.abs_residual / scale : r.abs_residual;
    r.pass = (r.relative ? r.rel_residual : r.abs_residual) <= r.tolerance;
}

inline int iparam(const Params& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::domain_error(std::string("missing parameter ") + key);
    return static_cast<int>(std::lround(it->second));
}

inline double dparam(const Params& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::domain_error(std::string("missing parameter ") + key);
    return it->second;
}

// ---- individual checkers --------------------------------------------------

// Anti-periodicity trend: C_k(a+1/2)/C_k(a) -> -1 as k grows.
inline VerificationReport check_P1(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P1";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "C_k(a+1/2)/C_k(a) via log-moment integral representation";
    r.rhs_route = "-1 (limit value)";
    const int k = iparam(p, "k");
    const double a = dparam(p, "a");
    auto c1 = stieltjes::c_k_integral(k, a, 1e-9);
    auto c2 = stieltjes::c_k_integral(k, a + 0.5, 1e-9);
    r.lhs = c2.value / c1.value;
    r.rhs = -1.0;
    r.terms_or_panels = k;
    finish(r);
    return r;
}

// Multiplication-type formula for gamma_n:
// gamma_n = (-1)^{n-1} m^{1-n} sum_l s(n+1,n+1-l)/l! int P_n(mx) ln^l x / x^{n+1}
//           - sum_{r=1}^{m-1} C_n(r/m).
inline VerificationReport check_P2(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P2";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "gamma_n via contour-coefficient oracle";
    r.rhs_route = "P_n(mx) log-moment quadrature minus integral-route C_n(r/m)";
    const int n = iparam(p, "n");
    const int m = iparam(p, "m");
    r.lhs = stieltjes::gamma_oracle(n, 1.0, 1e-12).value;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    kernel::CompensatedAccumulator acc;
    long panels = 0;
    for (int l = 0; l <= n + 1; ++l) {
        const BigInt s1 = kernel::stirling_s1(n + 1, n + 1 - l);
        if (s1 == 0) continue;
        const double coef = static_cast<double>(BigRat(s1) / BigRat(kernel::factorial(l)));
        const double itol = tol / (20.0 * (n + 2.0) * std::max(1.0, std::fabs(coef)));
        auto q = quad::integrate_pn_logk({n, l, 0.0, static_cast<double>(m), n + 1}, itol);
        panels += q.panels;
        acc.add(coef * q.value);
    }
    double rhs = sign * std::pow(m, 1.0 - n) * acc.result();
    for (int rr = 1; rr < m; ++rr)
        rhs -= stieltjes::c_k_integral(n, static_cast<double>(rr) / m, tol / (4.0 * m)).value;
    r.rhs = rhs;
    r.terms_or_panels = panels;
    finish(r);
    return r;
}

// Rational-argument summatory identity:
// sum_{r=1}^{q-1} gamma_k(r/q)
//   = -gamma_k + q (-1)^k ln^{k+1} q/(k+1) + q sum_j C(k,j)(-1)^j ln^j q gamma_{k-j}.
inline VerificationReport check_P3(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P3";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "sum of gamma_k(r/q) via contour-coefficient oracle";
    r.rhs_route = "gamma_0..gamma_k via Euler-Maclaurin limit formula";
    const int q = iparam(p, "q");
    const int k = iparam(p, "k");
    kernel::CompensatedAccumulator lhs;
    for (int rr = 1; rr < q; ++rr)
        lhs.add(stieltjes::gamma_oracle(k, static_cast<double>(rr) / q, 1e-12).value);
    r.lhs = lhs.result();
    const double lq = std::log(static_cast<double>(q));
    std::vector<double> gam(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) gam[static_cast<std::size_t>(j)] =
        stieltjes::euler_maclaurin_gamma_k(j).value;
    double rhs = -gam[static_cast<std::size_t>(k)];
    rhs += q * ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(lq, k + 1) / (k + 1);
    kernel::CompensatedAccumulator tail;
    for (int j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        tail.add(sign * static_cast<double>(kernel::binomial(k, j)) * std::pow(lq, j) *
                 gam[static_cast<std::size_t>(k - j)]);
    }
    r.rhs = rhs + q * tail.result();
    r.terms_or_panels = q - 1;
    finish(r);
    return r;
}

// Vanishing mean of the Hurwitz zeta function:
// 1/(1-s) + int_0^1 [zeta(s,a) - a^{-s}] da = 0 for sigma < 1.
inline VerificationReport check_P4(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P4";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "adaptive quadrature of zeta(s,a) - a^{-s} over (0,1)";
    r.rhs_route = "0 (exact)";
    const double s = dparam(p, "s");
    auto f = [&](double a) {
        return zeta::hurwitz_zeta_real(s, a, 1e-13).value - std::pow(a, -s);
    };
    auto q = quad::integrate_unit_a(f, s, tol / 2.0);
    r.lhs = q.value;
    r.rhs = 0.0;
    r.terms_or_panels = q.panels;
    finish(r);
    return r;
}

// Large-index sinusoid: C_k(a) ~ amplitude sin(2 pi (a + phase)).
// Scale-free: residual relative to the fitted amplitude.
inline VerificationReport check_P5(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P5";
    r.params = p;
    r.tolerance = tol;
    r.relative = false;  // lhs is already the normalized residual
    r.lhs_route = "max_a |C_k(a) - predicted(a)|/amplitude, C_k via integral route";
    r.rhs_route = "0 (asymptotic limit)";
    const int k = iparam(p, "k");
    auto fit = stieltjes::asymptotic_fit(k, 1e-10);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double a = (i + 0.5) / 8.0;
        auto c = stieltjes::c_k_integral(k, a, 1e-10);
        worst = std::max(worst, std::fabs(c.value - fit.predicted(a)) / fit.amplitude);
    }
    r.lhs = worst;
    r.rhs = 0.0;
    r.terms_or_panels = 8;
    finish(r);
    return r;
}

// Multiplication sum for C_k (plus branch):
// sum_{j=0}^{n-1} C_k(a + j/n)
//   = (-1)^{k-1} n^{1-k} sum_l s(k+1,k+1-l)/l! int P_k(n(x-a)) ln^l x / x^{k+1}.
inline VerificationReport check_P6(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P6";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "sum of C_k(a+j/n), gamma via oracle minus ln^k(a)/a";
    r.rhs_route = "P_k(n(x-a)) log-moment quadrature";
    const int k = iparam(p, "k");
    const int n = iparam(p, "n");
    const double a = dparam(p, "a");
    kernel::CompensatedAccumulator lhs;
    for (int j = 0; j < n; ++j) {
        // C_k has period 1 in its argument (the integrand depends on a only
        // through P_k(x-a)); reduce a+j/n into (0,1] before using the
        // gamma_k(a) - ln^k(a)/a relation, which holds on that interval.
        double aj = a + static_cast<double>(j) / n;
        aj -= std::floor(aj);
        if (aj == 0.0) aj = 1.0;
        lhs.add(stieltjes::gamma_oracle(k, aj, 1e-12).value - stieltjes::lnk_over_a(k, aj));
    }
    r.lhs = lhs.result();
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    kernel::CompensatedAccumulator acc;
    long panels = 0;
    for (int l = 0; l <= k + 1; ++l) {
        const BigInt s1 = kernel::stirling_s1(k + 1, k + 1 - l);
        if (s1 == 0) continue;
        const double coef = static_cast<double>(BigRat(s1) / BigRat(kernel::factorial(l)));
        const double itol = tol / (4.0 * (k + 2.0) * std::max(1.0, std::fabs(coef)));
        auto q = quad::integrate_pn_logk({k, l, a, static_cast<double>(n), k + 1}, itol);
        panels += q.panels;
        acc.add(coef * q.value);
    }
    r.rhs = sign * std::pow(n, 1.0 - k) * acc.result();
    r.terms_or_panels = panels;
    finish(r);
    return r;
}

// Coupled differential equations for gamma_j(a):
//   (-1)^j/j! dgamma_j/da = -sum_{k=j-1}^K (-1)^k/k! C(k+1,j) gamma_k(a),
// and the j = 0 companion -psi'(a) = -1 - sum_k (-1)^k gamma_k(a)/k!.
inline VerificationReport check_P7(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P7";
    r.params = p;
    r.tolerance = tol;
    const int j = iparam(p, "j");
    const double a = dparam(p, "a");
    const int K = 40;
    if (j == 0) {
        r.lhs_route = "-psi'(a) by five-point differences of recurrence/asymptotic digamma";
        r.rhs_route = "-1 - sum (-1)^k gamma_k(a)/k! via contour-coefficient oracle";
        const double h = 1e-3;
        r.lhs = -(-zeta::digamma(a + 2 * h).value + 8.0 * zeta::digamma(a + h).value -
                  8.0 * zeta::digamma(a - h).value + zeta::digamma(a - 2 * h).value) /
                (12.0 * h);
        auto g = stieltjes::gamma_oracle_range(K, a, 1e-10);
        kernel::CompensatedAccumulator acc;
        double kfac = 1.0;
        for (int k = 0; k <= K; ++k) {
            if (k > 0) kfac *= k;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            acc.add(sign * g[static_cast<std::size_t>(k)].value / kfac);
        }
        r.rhs = -1.0 - acc.result();
        r.terms_or_panels = K;
        finish(r);
        return r;
    }
    r.lhs_route = "five-point central differences of gamma_j(a) via oracle";
    r.rhs_route = "truncated binomial-weighted series of gamma_k(a) via oracle";
    const double h = 1e-3;
    auto gj = [&](double x) { return stieltjes::gamma_oracle(j, x, 1e-12).value; };
    const double dg =
        (-gj(a + 2 * h) + 8.0 * gj(a + h) - 8.0 * gj(a - h) + gj(a - 2 * h)) / (12.0 * h);
    const double jsign = (j % 2 == 0) ? 1.0 : -1.0;
    double jfac = 1.0;
    for (int i = 2; i <= j; ++i) jfac *= i;
    r.lhs = jsign / jfac * dg;
    auto g = stieltjes::gamma_oracle_range(K, a, 1e-10);
    kernel::CompensatedAccumulator acc;
    double kfac = 1.0;  // running k!, seeded at (j-1)!
    for (int i = 2; i <= j - 1; ++i) kfac *= i;
    for (int k = j - 1; k <= K; ++k) {
        if (k > j - 1) kfac *= k;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * static_cast<double>(kernel::binomial(k + 1, j)) *
                g[static_cast<std::size_t>(k)].value / kfac);
    }
    r.rhs = -acc.result();
    r.terms_or_panels = K;
    finish(r);
    return r;
}

// Euler-transform series for the Euler constant:
// gamma = ln2/2 - (1/ln2) sum_n 2^{-n-1} sum_k (-1)^k C(n,k) ln(k+1)/(k+1).
inline VerificationReport check_P8a(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P8a";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "binomial/Euler-transform log-sum, 52 outer terms";
    r.rhs_route = "gamma via contour-coefficient oracle";
    const int terms = p.count("terms") ? iparam(p, "terms") : 52;
    const double l2 = std::log(2.0);
    auto A = zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
    r.lhs = 0.5 * l2 - A.value / l2;
    r.rhs = stieltjes::gamma_oracle(0, 1.0, 1e-13).value;
    r.terms_or_panels = terms;
    finish(r);
    return r;
}

// Companion series for gamma_1:
// -gamma_1 = ln^2(2)/12 - A/2 + B/(2 ln 2), A and B the first and second
// binomial log-sums at s = 1.
inline VerificationReport check_P8b(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P8b";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "binomial/Euler-transform log-sums, 52 outer terms";
    r.rhs_route = "gamma_1 via contour-coefficient oracle";
    const int terms = p.count("terms") ? iparam(p, "terms") : 52;
    const double l2 = std::log(2.0);
    auto A = zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
    auto B = zeta::hasse_log_sum(2, 1.0, terms, 1e-16);
    r.lhs = -(l2 * l2 / 12.0 - 0.5 * A.value + B.value / (2.0 * l2));
    r.rhs = stieltjes::gamma_oracle(1, 1.0, 1e-13).value;
    r.terms_or_panels = terms;
    finish(r);
    return r;
}

// eta_1 = ln^2(2)/12 + A^2/ln^2(2) - B/ln 2 versus the logarithmic-series
// extraction from the gamma_k.  The A^2 coefficient is 1/ln^2(2), not
// 1/(2 ln^2 2): it follows by eliminating gamma and gamma_1 from the two
// series identities above via eta_1 = gamma^2 + 2 gamma_1, and the numeric
// gap of the halved variant is exactly A^2/(2 ln^2 2) ~ 2.7e-2.
inline VerificationReport check_P8c(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P8c";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "binomial/Euler-transform log-sums";
    r.rhs_route = "log of the Laurent factor built from oracle gamma_k";
    const int terms = p.count("terms") ? iparam(p, "terms") : 60;
    const double l2 = std::log(2.0);
    auto A = zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
    auto B = zeta::hasse_log_sum(2, 1.0, terms, 1e-16);
    r.lhs = l2 * l2 / 12.0 + A.value * A.value / (l2 * l2) - B.value / l2;
    auto eta = stieltjes::eta_from_gamma(2, 1e-12);
    r.rhs = eta.values[1];
    r.terms_or_panels = terms;
    finish(r);
    return r;
}

// ln(pi) = ln 2 - 2 sum_n 2^{-n-1} sum_k (-1)^k C(n,k) ln(k+1).
inline VerificationReport check_P8d(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P8d";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "binomial/Euler-transform log-sum at s = 0";
    r.rhs_route = "log(pi) from the C runtime";
    const int terms = p.count("terms") ? iparam(p, "terms") : 80;
    auto A = zeta::hasse_log_sum(1, 0.0, terms, 1e-15);
    r.lhs = std::log(2.0) - 2.0 * A.value;
    r.rhs = std::log(M_PI);
    r.terms_or_panels = terms;
    finish(r);
    return r;
}

// Even-zeta Bernoulli values: both globally convergent series equal
// (-1)^{n-1} 2^{2n-1} pi^{2n} B_{2n}/(2n)! = zeta(2n).
inline VerificationReport check_P8e(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "P8e";
    r.params = p;
    r.tolerance = tol;
    r.relative = true;
    const int n = iparam(p, "n");
    const int series = p.count("series") ? iparam(p, "series") : 1;
    r.rhs_route = "(-1)^{n-1} 2^{2n-1} pi^{2n} B_{2n}/(2n)! from exact Bernoulli numbers";
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    r.rhs = sign * std::pow(2.0, 2 * n - 1) * std::pow(M_PI, 2 * n) *
            static_cast<double>(BigRat(kernel::bernoulli_number(2 * n)) /
                                BigRat(kernel::factorial(2 * n)));
    if (series == 1) {
        r.lhs_route = "fast binomial-transform series";
        auto z = zeta::hasse1_zeta(2.0 * n, 200, 1e-12);
        r.lhs = z.value;
        r.terms_or_panels = 200;
    } else {
        r.lhs_route = "slow unweighted binomial series via symmetric-function closed form";
        auto z = zeta::hasse2_zeta(2.0 * n, 200000, 1e-9);
        r.lhs = z.value;
        r.terms_or_panels = 200000;
    }
    finish(r);
    return r;
}

// zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2 pi)^{2n}).
inline VerificationReport check_E16(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "E16";
    r.params = p;
    r.tolerance = tol;
    r.relative = true;
    r.lhs_route = "term-by-term derivative of the binomial-transform series at s = -2n";
    r.rhs_route = "(2n)! zeta(2n+1)/(2 (2pi)^{2n}) with zeta by Euler-Maclaurin";
    const int n = iparam(p, "n");
    auto d = zeta::hasse1_zeta_prime(-2.0 * n, 1e-9);
    r.lhs = d.value;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    r.rhs = sign * static_cast<double>(kernel::factorial(2 * n)) *
            zeta::riemann_zeta_real(2.0 * n + 1.0, 1e-14).value /
            (2.0 * std::pow(2.0 * M_PI, 2 * n));
    finish(r);
    return r;
}

// Hansen-Patrick identity: sum_{r=1}^{q-1} zeta(s, r/q) = (q^s - 1) zeta(s).
inline VerificationReport check_HP(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "HP";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "Hurwitz zeta by Euler-Maclaurin at r/q";
    r.rhs_route = "(q^s - 1) times the binomial-transform zeta series";
    const int q = iparam(p, "q");
    const double s = dparam(p, "s");
    kernel::CompensatedAccumulator lhs;
    for (int rr = 1; rr < q; ++rr)
        lhs.add(zeta::hurwitz_zeta_real(s, static_cast<double>(rr) / q, 1e-13).value);
    r.lhs = lhs.result();
    r.rhs = (std::pow(static_cast<double>(q), s) - 1.0) * zeta::hasse1_zeta(s, 200, 1e-12).value;
    r.terms_or_panels = q - 1;
    finish(r);
    return r;
}

// Polygamma plus finite sum versus the shifted tail integral:
// (-1)^n/(n+1)! psi^{(n)}(s) + 1/(n+1) sum_{k=0}^m (s+k)^{-(n+1)}
//   = int_m^inf P_1(x)/(x+s+1)^{n+2} dx
//     - 1/(n(n+1)(s+m+1)^n) - 1/(2(n+1)(s+m+1)^{n+1}).
// The split of int_0^inf at x = 1 evaluates directly to
//   int_0^1 (x-1/2)(x+s)^{-n-2} dx
//     = [s^{-n}-(s+1)^{-n}]/(n(n+1)) - [s^{-n-1}+(s+1)^{-n-1}]/(2(n+1)),
// whose s^{-n-1} piece cancels the 1/(2(n+1)s^{n+1}) boundary term exactly,
// so no (s+m)^{-(n+1)} term survives on the right-hand side.
inline VerificationReport check_A1(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "A1";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "polygamma via Hurwitz zeta plus finite shift sum";
    r.rhs_route = "adaptive quadrature with exact boundary-corrected tail";
    const int n = iparam(p, "n");
    const int m = iparam(p, "m");
    const double s = dparam(p, "s");
    const double np1fac = static_cast<double>(kernel::factorial(n + 1));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    double lhs = sign / np1fac * zeta::polygamma(n, s, 1e-13).value;
    kernel::CompensatedAccumulator sum;
    for (int k = 0; k <= m; ++k) sum.add(std::pow(s + k, -(n + 1.0)));
    r.lhs = lhs + sum.result() / (n + 1.0);
    auto q = quad::integrate_appendix(n, m, s, tol / 4.0);
    r.rhs = q.value -
            std::pow(s + m + 1.0, -static_cast<double>(n)) / (n * (n + 1.0)) -
            0.5 * std::pow(s + m + 1.0, -(n + 1.0)) / (n + 1.0);
    r.terms_or_panels = q.panels;
    finish(r);
    return r;
}

// Same family, the closed form before shifting:
// (-1)^n/(n+1)! psi^{(n)}(s+1) = -1/(n(n+1)(s+1)^n)
//   - 1/(2(n+1)(s+1)^{n+1}) + int_1^inf P_1(x)/(x+s)^{n+2} dx
// (no free s^{-(n+1)} term; see the split-integral note on the check above).
inline VerificationReport check_A6(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "A6";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "polygamma via Hurwitz zeta";
    r.rhs_route = "closed terms plus adaptive quadrature";
    const int n = iparam(p, "n");
    const double s = dparam(p, "s");
    const double np1fac = static_cast<double>(kernel::factorial(n + 1));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    r.lhs = sign / np1fac * zeta::polygamma(n, s + 1.0, 1e-13).value;
    auto q = quad::integrate_appendix(n, 1, s - 1.0, tol / 4.0);
    r.rhs = -std::pow(s + 1.0, -static_cast<double>(n)) / (n * (n + 1.0)) -
            0.5 * std::pow(s + 1.0, -(n + 1.0)) / (n + 1.0) + q.value;
    r.terms_or_panels = q.panels;
    finish(r);
    return r;
}

// Generalized digamma equivalence: psi_k(a) = -gamma_k(a).
inline VerificationReport check_D(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "D";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "log-power digamma series with Euler-Maclaurin tail";
    r.rhs_route = "-gamma_k(a) via contour-coefficient oracle";
    const int k = iparam(p, "k");
    const double a = dparam(p, "a");
    auto d = stieltjes::dilcher_psi(k, a, tol / 2.0);
    r.lhs = d.value;
    r.rhs = -stieltjes::gamma_oracle(k, a, 1e-12).value;
    finish(r);
    return r;
}

// Simplified split of the integral representation at a = 1: C_n(1) = gamma_n.
inline VerificationReport check_X17(const Params& p, double tol) {
    VerificationReport r;
    r.identity_id = "X17";
    r.params = p;
    r.tolerance = tol;
    r.lhs_route = "C_n(1) via split log-moment integral representation";
    r.rhs_route = "gamma_n via contour-coefficient oracle";
    const int n = iparam(p, "n");
    auto c = stieltjes::c_k_integral(n, 1.0, tol / 2.0);
    r.lhs = c.value;
    r.rhs = stieltjes::gamma_oracle(n, 1.0, 1e-12).value;
    finish(r);
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog and suite runner.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = {"P1",  "P2",  "P3",  "P4", "P5", "P6",
                                                 "P7",  "P8a", "P8b", "P8c", "P8d", "P8e",
                                                 "E16", "HP",  "A1",  "A6", "D",  "X17"};
    return ids;
}

inline VerificationReport run_check(const std::string& id, const Params& params, double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
        if (id == "P1") r = detail::check_P1(params, tol);
        else if (id == "P2") r = detail::check_P2(params, tol);
        else if (id == "P3") r = detail::check_P3(params, tol);
        else if (id == "P4") r = detail::check_P4(params, tol);
        else if (id == "P5") r = detail::check_P5(params, tol);
        else if (id == "P6") r = detail::check_P6(params, tol);
        else if (id == "P7") r = detail::check_P7(params, tol);
        else if (id == "P8a") r = detail::check_P8a(params, tol);
        else if (id == "P8b") r = detail::check_P8b(params, tol);
        else if (id == "P8c") r = detail::check_P8c(params, tol);
        else if (id == "P8d") r = detail::check_P8d(params, tol);
        else if (id == "P8e") r = detail::check_P8e(params, tol);
        else if (id == "E16" || id == "P8f") r = detail::check_E16(params, tol);
        else if (id == "HP") r = detail::check_HP(params, tol);
        else if (id == "A1") r = detail::check_A1(params, tol);
        else if (id == "A6") r = detail::check_A6(params, tol);
        else if (id == "D") r = detail::check_D(params, tol);
        else if (id == "X17") r = detail::check_X17(params, tol);
        else throw std::domain_error("run_check: unknown identity id " + id);
    } catch (const convergence_error& e) {
        r.identity_id = id;
        r.params = params;
        r.tolerance = tol;
        r.pass = false;
        r.note = std::string("convergence failure: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

struct SuiteCase {
    std::string id;
    Params params;
    double fast_tol;
    double deep_tol;
};

// Default parameter grids; tolerances follow the per-identity limits where the
// generic profile values (fast 1e-8, deep 1e-11) are not attainable (trend and
// asymptotic checks, finite-difference routes, slow series).
inline std::vector<SuiteCase> default_cases(const std::string& id) {
    std::vector<SuiteCase> cs;
    auto add = [&](Params p, double fast, double deep) {
        cs.push_back({id, std::move(p), fast, deep});
    };
    if (id == "P1") {
        add({{"k", 15}, {"a", 0.2}}, 1e-2, 1e-2);
        add({{"k", 25}, {"a", 0.2}}, 1e-4, 1e-4);
    } else if (id == "P2") {
        for (int n = 1; n <= 3; ++n)
            for (int m = 2; m <= 3; ++m) add({{"n", n}, {"m", m}}, 1e-8, 1e-9);
    } else if (id == "P3") {
        for (int q : {2, 3, 4, 6})
            for (int k = 0; k <= 3; ++k) add({{"q", q}, {"k", k}}, 1e-9, 1e-11);
    } else if (id == "P4") {
        for (double s : {-0.5, 0.0, 0.3}) add({{"s", s}}, 1e-8, 1e-10);
    } else if (id == "P5") {
        add({{"k", 21}}, 1e-2, 1e-2);
        add({{"k", 31}}, 1e-3, 1e-3);
    } else if (id == "P6") {
        for (int k = 1; k <= 3; ++k)
            for (int n = 2; n <= 3; ++n)
                for (double a : {0.3, 0.6}) add({{"k", k}, {"n", n}, {"a", a}}, 1e-8, 1e-9);
    } else if (id == "P7") {
        for (double a : {0.5, 1.0}) {
            add({{"j", 0}, {"a", a}}, 1e-8, 1e-8);
            for (int j = 1; j <= 3; ++j) add({{"j", j}, {"a", a}}, 1e-6, 1e-6);
        }
    } else if (id == "P8a") {
        add({{"terms", 52}}, 5e-15, 5e-15);
    } else if (id == "P8b") {
        add({{"terms", 52}}, 1e-13, 1e-13);
    } else if (id == "P8c") {
        add({}, 1e-10, 1e-11);
    } else if (id == "P8d") {
        add({}, 1e-12, 1e-12);
    } else if (id == "P8e") {
        for (int n = 1; n <= 4; ++n) {
            add({{"n", n}, {"series", 1}}, 1e-10, 1e-11);
            add({{"n", n}, {"series", 2}}, 1e-8, 1e-8);
        }
    } else if (id == "E16") {
        for (int n = 1; n <= 3; ++n) add({{"n", n}}, 1e-8, 1e-8);
    } else if (id == "HP") {
        for (int q : {2, 3, 5})
            for (double s : {0.5, 2.5, -1.5}) add({{"q", q}, {"s", s}}, 1e-8, 1e-11);
    } else if (id == "A1") {
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m)
                for (double s : {0.5, 1.0, 2.5})
                    add({{"n", n}, {"m", m}, {"s", s}}, 1e-10, 1e-11);
    } else if (id == "A6") {
        for (int n = 1; n <= 3; ++n)
            for (double s : {0.5, 1.5}) add({{"n", n}, {"s", s}}, 1e-10, 1e-11);
    } else if (id == "D") {
        for (int k = 0; k <= 3; ++k)
            for (double a : {0.25, 1.0, 1.5}) add({{"k", k}, {"a", a}}, 1e-8, 1e-9);
    } else if (id == "X17") {
        for (int n = 1; n <= 4; ++n) add({{"n", n}}, 1e-9, 1e-10);
    }
    return cs;
}

inline int default_jobs() {
    if (const char* env = std::getenv("STIELTJES_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
}

// Run the default grids for the named identities with the chosen profile.
// Reports come back in catalog order regardless of completion order.
inline std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                                 const std::string& profile,
                                                 int jobs = 0) {
    const bool deep = profile == "deep";
    if (!deep && profile != "fast")
        throw std::domain_error("run_suite: profile must be fast or deep");
    std::vector<SuiteCase> cases;
    for (const auto& id : ids) {
        auto cs = default_cases(id);
        cases.insert(cases.end(), cs.begin(), cs.end());
    }
    std::vector<VerificationReport> reports(cases.size());
    if (jobs <= 0) jobs = default_jobs();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            reports[i] =
                run_check(cases[i].id, cases[i].params,
                          deep ? cases[i].deep_tol : cases[i].fast_tol);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(jobs, static_cast<int>(cases.size()));
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace sc::verify

#endif
