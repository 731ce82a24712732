#ifndef STIELTJES_STIELTJES_HPP
#define STIELTJES_STIELTJES_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "stieltjes/numkernel.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/zetacore.hpp"

// Stieltjes constants gamma_k(a) and C_k(a) by independent routes: Cauchy
// contour coefficients of the Hurwitz zeta Laurent expansion, the periodic
// Bernoulli integral representation, and the Dilcher generalized digamma
// series; plus eta_j extraction and the large-index asymptotic sinusoid.

namespace sc::stieltjes {

enum class Method { oracle, integral, dilcher, hasse };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::integral: return "integral";
        case Method::dilcher: return "dilcher";
        case Method::hasse: return "hasse";
    }
    return "?";
}

struct StieltjesValue {
    int k = 0;
    double a = 1.0;
    double value = 0.0;
    double err = 0.0;
    Method method = Method::oracle;
};

struct AsymptoticFit {
    int k = 0;
    double r1 = 0.0, r2 = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;  // in [0,1)
    double predicted(double a) const {
        return r1 * std::cos(2.0 * M_PI * a) - r2 * std::sin(2.0 * M_PI * a);
    }
};

struct EtaSequence {
    std::vector<double> values;  // eta_0 .. eta_J
    double err = 0.0;
};

// ---------------------------------------------------------------------------
// Contour-coefficient oracle.  g(s) = zeta(s,a) - 1/(s-1) is entire, so the
// k-th Taylor coefficient at s=1 comes from trapezoid averaging of
// g(1 + r e^{i t}) e^{-i k t} / r^k, spectrally accurate in the node count.
// gamma_k(a) = (-1)^k k! c_k.
// ---------------------------------------------------------------------------

// All coefficients 0..kmax from one node sweep; value/err per k.
inline std::vector<StieltjesValue> gamma_oracle_range(int kmax, double a, double tol) {
    if (kmax < 0 || !(a > 0.0)) throw std::domain_error("gamma_oracle_range: k >= 0, a > 0");
    std::vector<StieltjesValue> best(static_cast<std::size_t>(kmax) + 1);
    std::vector<double> best_err(static_cast<std::size_t>(kmax) + 1,
                                 std::numeric_limits<double>::infinity());
    std::vector<std::vector<double>> prev;  // previous setting's gamma values
    const double inner_tol = std::max(1e-15, tol * 1e-3);
    for (double r : {1.0, 2.0, 3.0}) {
        for (int M = std::max(64, 8 * (kmax + 1)); M <= 4096; M *= 2) {
            std::vector<std::complex<double>> g(static_cast<std::size_t>(M));
            for (int j = 0; j < M; ++j) {
                const double t = 2.0 * M_PI * j / M;
                const std::complex<double> u = std::polar(r, t);
                const std::complex<double> s = 1.0 + u;
                g[static_cast<std::size_t>(j)] =
                    zeta::hurwitz_zeta(s, a, inner_tol, /*certify=*/false).value - 1.0 / u;
            }
            std::vector<double> gam(static_cast<std::size_t>(kmax) + 1);
            double kfac = 1.0;
            for (int k = 0; k <= kmax; ++k) {
                if (k > 0) kfac *= k;
                kernel::CompensatedAccumulator re;
                for (int j = 0; j < M; ++j) {
                    const double t = 2.0 * M_PI * j * k / M;
                    const auto& gj = g[static_cast<std::size_t>(j)];
                    re.add(gj.real() * std::cos(t) + gj.imag() * std::sin(t));
                }
                const double ck = re.result() / (M * std::pow(r, k));
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                gam[static_cast<std::size_t>(k)] = sign * kfac * ck;
            }
            // agreement across consecutive settings is the error estimate
            for (const auto& p : prev) {
                for (int k = 0; k <= kmax; ++k) {
                    const double d = std::fabs(gam[static_cast<std::size_t>(k)] -
                                               p[static_cast<std::size_t>(k)]);
                    if (d < best_err[static_cast<std::size_t>(k)]) {
                        best_err[static_cast<std::size_t>(k)] = d;
                        best[static_cast<std::size_t>(k)] = {k, a, gam[static_cast<std::size_t>(k)],
                                                             std::max(d, 4e-16 * kfac / std::pow(r, k)),
                                                             Method::oracle};
                    }
                }
            }
            prev.push_back(gam);
            bool all_met = true;
            for (int k = 0; k <= kmax; ++k)
                if (best_err[static_cast<std::size_t>(k)] > tol) all_met = false;
            if (all_met && prev.size() >= 2) return best;
        }
    }
    // Not all coefficients certified at tol; the per-k err fields carry the
    // achieved bounds.
    for (int k = 0; k <= kmax; ++k) {
        if (!std::isfinite(best_err[static_cast<std::size_t>(k)]))
            throw convergence_error("gamma_oracle_range: no stable estimate", 0.0,
                                    best_err[static_cast<std::size_t>(k)]);
    }
    return best;
}

inline StieltjesValue gamma_oracle(int k, double a, double tol) {
    auto v = gamma_oracle_range(k, a, tol);
    return v[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Independent Euler-Maclaurin limit oracle for gamma_k = gamma_k(1):
// gamma_k = lim_N [ sum_{n<=N} ln^k n / n - ln^{k+1} N/(k+1) ], with the tail
// corrected through Bernoulli terms on f(x) = ln^k x / x.  This route shares
// no code with the contour or Hasse paths.
// ---------------------------------------------------------------------------
inline WorkingReal euler_maclaurin_gamma_k(int k, long N = 20000, int J = 8) {
    if (k < 0) throw std::domain_error("euler_maclaurin_gamma_k: k >= 0");
    // f^{(m)}(x) = sum_j c_{m,j} ln^j x / x^{1+m}
    // c_{0,k} = 1; c_{m+1,j} = -(1+m) c_{m,j} + (j+1) c_{m,j+1}
    std::vector<std::vector<long double>> c(static_cast<std::size_t>(2 * J + 1));
    c[0].assign(static_cast<std::size_t>(k) + 1, 0.0L);
    c[0][static_cast<std::size_t>(k)] = 1.0L;
    for (int m = 0; m < 2 * J; ++m) {
        const auto& cm = c[static_cast<std::size_t>(m)];
        std::vector<long double> nxt(cm.size(), 0.0L);
        for (std::size_t j = 0; j < cm.size(); ++j) {
            nxt[j] -= (1.0L + m) * cm[j];
            if (j + 1 < cm.size()) nxt[j] += (static_cast<long double>(j) + 1.0L) * cm[j + 1];
        }
        c[static_cast<std::size_t>(m) + 1] = std::move(nxt);
    }
    auto feval = [&](int m, long double x) {
        const long double lx = std::log(x);
        long double acc = 0.0L, lp = 1.0L;
        for (long double cj : c[static_cast<std::size_t>(m)]) {
            acc += cj * lp;
            lp *= lx;
        }
        return acc / std::pow(x, static_cast<long double>(1 + m));
    };
    long double sum = 0.0L;
    for (long n = 1; n <= N; ++n) sum += feval(0, static_cast<long double>(n));
    const long double lN = std::log(static_cast<long double>(N));
    long double v = sum - std::pow(lN, static_cast<long double>(k + 1)) / (k + 1);
    v -= 0.5L * feval(0, static_cast<long double>(N));
    // Euler-Maclaurin: gamma_k = T(N) - f(N)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(N)
    long double last = 0.0L;
    for (int j = 1; j <= J; ++j) {
        const long double b = static_cast<long double>(
            static_cast<double>(BigRat(kernel::bernoulli_number(2 * j)) /
                                BigRat(kernel::factorial(2 * j))));
        last = b * feval(2 * j - 1, static_cast<long double>(N));
        v -= last;
    }
    return {static_cast<double>(v), std::fabs(static_cast<double>(last)) + 2e-18 * std::fabs(static_cast<double>(sum))};
}

// ---------------------------------------------------------------------------
// Integral representation (j = 0 term isolated in the evaluation order):
// C_k(a) = (-1)^{k-1} sum_{j=0}^{k+1} s(k+1,k+1-j)/j! int_1^inf P_k(x-a) ln^j x / x^{k+1} dx.
// (A k! prefactor sometimes quoted with this representation is spurious: with
// it the right side equals k!*C_k(a), as direct comparison against the
// contour-coefficient values shows for k = 1..4.)
// ---------------------------------------------------------------------------
inline StieltjesValue c_k_integral(int k, double a, double tol) {
    if (k < 1 || !(a > 0.0)) throw std::domain_error("c_k_integral: k >= 1, a > 0");
    const double sgn = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
    if (k >= 12) {
        // The Stirling weights reach ~1e14 while the weighted sum of integrals
        // collapses by ~12 orders; evaluate the summed integrand in extended
        // precision instead of combining per-power results.
        std::vector<BigRat> coef(static_cast<std::size_t>(k) + 2);
        for (int j = 0; j <= k + 1; ++j)
            coef[static_cast<std::size_t>(j)] =
                BigRat(kernel::stirling_s1(k + 1, k + 1 - j)) / BigRat(kernel::factorial(j));
        auto q = quad::mp_stirling_integral(quad::MpWeight::bernoulli, k, a, coef, k + 1, tol);
        return {k, a, sgn * q.value, q.error_bound, Method::integral};
    }
    // weights w_j = |s(k+1,k+1-j)| / j!
    std::vector<double> w(static_cast<std::size_t>(k) + 2);
    double wsum = 0.0;
    for (int j = 0; j <= k + 1; ++j) {
        w[static_cast<std::size_t>(j)] =
            std::fabs(static_cast<double>(BigRat(kernel::stirling_s1(k + 1, k + 1 - j)) /
                                          BigRat(kernel::factorial(j))));
        wsum += w[static_cast<std::size_t>(j)];
    }
    kernel::CompensatedAccumulator acc;
    double err = 0.0;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
    const double nterms = k + 2.0;
    for (int j = 0; j <= k + 1; ++j) {
        if (kernel::stirling_s1(k + 1, k + 1 - j) == 0) continue;
        const double wj = w[static_cast<std::size_t>(j)];
        // allocate tol/2 across the weighted integrals
        const double itol = tol / (2.0 * nterms * wj);
        auto q = quad::integrate_pn_logk({k, j, a, 1.0, k + 1}, itol);
        const double coef = sign *
            static_cast<double>(BigRat(kernel::stirling_s1(k + 1, k + 1 - j)) /
                                BigRat(kernel::factorial(j)));
        acc.add(coef * q.value);
        err += std::fabs(coef) * q.error_bound;
    }
    (void)wsum;
    return {k, a, acc.result(), err, Method::integral};
}

// gamma_k(a) = C_k(a) + ln^k(a)/a.
inline double lnk_over_a(int k, double a) {
    return std::pow(std::log(a), k) / a;
}

inline StieltjesValue gamma_k_via_integral(int k, double a, double tol) {
    auto c = c_k_integral(k, a, tol);
    c.value += lnk_over_a(k, a);
    return c;
}

// ---------------------------------------------------------------------------
// Dilcher generalized digamma, the convergent counter-term reading:
// psi_k(a) = -gamma_k - ln^k(a)/a - sum_{v>=1} [ln^k(v+a)/(v+a) - ln^k(v)/v],
// partial sum plus Euler-Maclaurin tail on h(x) = f(x+a) - f(x), f = ln^k x/x.
// ---------------------------------------------------------------------------
inline WorkingReal dilcher_psi(int k, double a, double tol) {
    if (k < 0 || !(a > 0.0)) throw std::domain_error("dilcher_psi: k >= 0, a > 0");
    const auto gk = euler_maclaurin_gamma_k(k);
    const long N = 20000;
    // same derivative machinery as the limit oracle
    const int J = 6;
    std::vector<std::vector<long double>> c(static_cast<std::size_t>(2 * J + 1));
    c[0].assign(static_cast<std::size_t>(k) + 1, 0.0L);
    c[0][static_cast<std::size_t>(k)] = 1.0L;
    for (int m = 0; m < 2 * J; ++m) {
        const auto& cm = c[static_cast<std::size_t>(m)];
        std::vector<long double> nxt(cm.size(), 0.0L);
        for (std::size_t j = 0; j < cm.size(); ++j) {
            nxt[j] -= (1.0L + m) * cm[j];
            if (j + 1 < cm.size()) nxt[j] += (static_cast<long double>(j) + 1.0L) * cm[j + 1];
        }
        c[static_cast<std::size_t>(m) + 1] = std::move(nxt);
    }
    auto feval = [&](int m, long double x) {
        const long double lx = std::log(x);
        long double acc = 0.0L, lp = 1.0L;
        for (long double cj : c[static_cast<std::size_t>(m)]) {
            acc += cj * lp;
            lp *= lx;
        }
        return acc / std::pow(x, static_cast<long double>(1 + m));
    };
    long double vsum = 0.0L;
    for (long v = 1; v <= N; ++v) {
        const long double x = static_cast<long double>(v);
        vsum += feval(0, x + a) - feval(0, x);
    }
    // tail sum_{v>N} h(v) = int_N^inf h + h(N)/2-type corrections with
    // h(x) = f(x+a) - f(x); int_N^inf h = -[ln^{k+1}(N+a) - ln^{k+1}(N)]/(k+1).
    const long double lNa = std::log(static_cast<long double>(N) + a);
    const long double lN = std::log(static_cast<long double>(N));
    long double tail = -(std::pow(lNa, static_cast<long double>(k + 1)) -
                         std::pow(lN, static_cast<long double>(k + 1))) /
                       (k + 1);
    tail -= 0.5L * (feval(0, static_cast<long double>(N) + a) - feval(0, static_cast<long double>(N)));
    long double last = 0.0L;
    for (int j = 1; j <= J; ++j) {
        const long double b = static_cast<long double>(
            static_cast<double>(BigRat(kernel::bernoulli_number(2 * j)) /
                                BigRat(kernel::factorial(2 * j))));
        last = b * (feval(2 * j - 1, static_cast<long double>(N) + a) -
                    feval(2 * j - 1, static_cast<long double>(N)));
        tail -= last;
    }
    const double series = static_cast<double>(vsum + tail);
    const double v = -gk.value - lnk_over_a(k, a) - series;
    const double err = gk.err + std::fabs(static_cast<double>(last)) + 1e-15;
    if (err > tol)
        throw convergence_error("dilcher_psi: tail estimate exceeds tolerance", v, err);
    return {v, err};
}

// ---------------------------------------------------------------------------
// eta_j from gamma_k: (s-1) zeta(s) = 1 + sum_{k>=0} (-1)^k gamma_k/k! u^{k+1};
// ln zeta = -ln u + ln(that factor), eta_{p-1} = -p * coefficient of u^p.
// ---------------------------------------------------------------------------
inline EtaSequence eta_from_gamma(int J, double tol) {
    if (J < 0 || J > 10) throw std::domain_error("eta_from_gamma: 0 <= J <= 10");
    auto g = gamma_oracle_range(J + 1, 1.0, tol);
    series::LaurentSeries f;
    f.c.assign(static_cast<std::size_t>(J) + 2, 0.0);
    f.c[0] = 1.0;
    double kfac = 1.0;
    for (int k = 0; k <= J; ++k) {
        if (k > 0) kfac *= k;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        f.c[static_cast<std::size_t>(k) + 1] = sign * g[static_cast<std::size_t>(k)].value / kfac;
    }
    auto lg = series::series_log(f);
    EtaSequence eta;
    eta.values.resize(static_cast<std::size_t>(J) + 1);
    double errsum = 0.0;
    for (int p = 1; p <= J + 1; ++p) {
        eta.values[static_cast<std::size_t>(p) - 1] = -p * lg.c[static_cast<std::size_t>(p)];
        errsum += g[static_cast<std::size_t>(p) - 1].err;
    }
    eta.err = 4.0 * (errsum + 1e-16);
    return eta;
}

// ---------------------------------------------------------------------------
// Large-index sinusoid (odd k = 2n-1):
// C_k(a) ~ r1 cos 2 pi a - r2 sin 2 pi a = amplitude * sin(2 pi (a + phase)),
// r1/r2 from the Stirling-weighted sin/cos log-moment integrals with
// kappa_n = (-1)^n 2 (2n-1)! / (2 pi)^{2n-1}, the leading Fourier amplitude
// of P_{2n-1}; consistent with the factorial-free form of c_k_integral.
// ---------------------------------------------------------------------------
inline AsymptoticFit asymptotic_fit(int k, double tol) {
    if (k % 2 == 0 || k < 11) throw std::domain_error("asymptotic_fit: odd k >= 11 required");
    const int n = (k + 1) / 2;  // k = 2n-1
    const double fac = static_cast<double>(kernel::factorial(2 * n - 1));
    const double kappa = ((n % 2 == 0) ? 1.0 : -1.0) * 2.0 * fac /
                         std::pow(2.0 * M_PI, 2 * n - 1);
    // Same cancellation structure as c_k_integral at large k: sum the Stirling
    // weights inside the integral and evaluate in extended precision.
    std::vector<BigRat> coef(static_cast<std::size_t>(2 * n) + 1);
    for (int j = 0; j <= 2 * n; ++j)
        coef[static_cast<std::size_t>(j)] =
            BigRat(kernel::stirling_s1(2 * n, 2 * n - j)) / BigRat(kernel::factorial(j));
    const double itol = std::max(1e-18, tol / (2.0 * std::fabs(kappa)));
    auto qs = quad::mp_stirling_integral(quad::MpWeight::sine, 0, 0.0, coef, 2 * n, itol);
    auto qc = quad::mp_stirling_integral(quad::MpWeight::cosine, 0, 0.0, coef, 2 * n, itol);
    AsymptoticFit fit;
    fit.k = k;
    fit.r1 = kappa * qs.value;
    fit.r2 = kappa * qc.value;
    fit.amplitude = std::hypot(fit.r1, fit.r2);
    // sin(2 pi (a+phi)) matches r1 cos - r2 sin when sin 2 pi phi = r1/m,
    // cos 2 pi phi = -r2/m; two-argument arctangent fixes the quadrant.
    double ph = std::atan2(fit.r1, -fit.r2) / (2.0 * M_PI);
    if (ph < 0.0) ph += 1.0;
    fit.phase = ph;
    return fit;
}

}  // namespace sc::stieltjes

#endif
