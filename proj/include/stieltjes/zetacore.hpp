#ifndef STIELTJES_ZETACORE_HPP
#define STIELTJES_ZETACORE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "stieltjes/numkernel.hpp"
#include "stieltjes/quadrature.hpp"

// Hurwitz/Riemann zeta by Euler-Maclaurin (real and complex s), digamma and
// polygamma, and the two globally convergent Hasse series with their
// derivative and log-moment generalizations.

namespace sc::zeta {

struct EulerMaclaurinConfig {
    int direct_terms;      // N
    int correction_terms;  // J
};

namespace detail {

inline std::complex<double> pochhammer(std::complex<double> s, int m) {
    std::complex<double> p = 1.0;
    for (int i = 0; i < m; ++i) p *= s + static_cast<double>(i);
    return p;
}

// B_j/j! as double, cached (signed).
inline double bern_fact_ratio_signed(int two_j) {
    static std::vector<double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= two_j) {
        const int j = static_cast<int>(cache.size());
        cache.push_back(
            static_cast<double>(BigRat(kernel::bernoulli_number(j)) / BigRat(kernel::factorial(j))));
    }
    return cache[static_cast<std::size_t>(two_j)];
}

// |B_{2J+2}/(2J+2)!|, used by the remainder bound.
inline double bern_fact_ratio(int two_j) { return std::fabs(bern_fact_ratio_signed(two_j)); }

// Remainder bound for the Euler-Maclaurin tail of zeta(s, a) after N direct
// terms and J Bernoulli corrections:
//   |R| <= |B_{2J+2}/(2J+2)!| |(s)_{2J+1}| (N+a)^{-sigma-2J-1} |s+2J+1|/(sigma+2J+1).
inline double em_remainder_bound(std::complex<double> s, double a, int N, int J) {
    const double sigma = s.real();
    if (sigma + 2 * J + 1 <= 0.0) return std::numeric_limits<double>::infinity();
    const double z = N + a;
    return bern_fact_ratio(2 * J + 2) * std::abs(pochhammer(s, 2 * J + 1)) *
           std::pow(z, -sigma - 2 * J - 1) * std::abs(s + (2.0 * J + 1.0)) /
           (sigma + 2 * J + 1);
}

}  // namespace detail

// zeta(s, a) by Euler-Maclaurin with auto-chosen (N, J); the remainder bound
// is computed, never assumed, and reported in err.  With certify = false the
// best-effort value is returned (err still honest) instead of throwing when
// tol is below the attainable rounding floor; callers that derive their own
// error estimate (e.g. contour agreement) use that mode.
inline WorkingComplex hurwitz_zeta(std::complex<double> s, double a, double tol,
                                   bool certify = true) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a > 0");
    if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    constexpr int kJmax = 15;
    constexpr int kRounds = 20;
    int N = std::max<int>(10, static_cast<int>(std::abs(s)) + 16);
    for (int round = 0; round < kRounds; ++round, N *= 2) {
        int bestJ = 1;
        double best = std::numeric_limits<double>::infinity();
        for (int J = 1; J <= kJmax; ++J) {
            const double b = detail::em_remainder_bound(s, a, N, J);
            if (b < best) {
                best = b;
                bestJ = J;
            }
        }
        const bool last_round = round + 1 == kRounds;
        // In best-effort mode, stop escalating N once the truncation bound is
        // below the rounding floor; more terms cannot help past that point.
        const double floor_proxy = 4e-16 * (std::pow(a, -s.real()) + 1.0);
        const bool floored = !certify && best <= floor_proxy;
        if (best > 0.5 * tol && !floored && !last_round) continue;
        kernel::CompensatedAccumulator re, im;
        for (int j = 0; j < N; ++j) {
            const std::complex<double> t = std::exp(-s * std::log(j + a));
            re.add(t.real());
            im.add(t.imag());
        }
        const double lz = std::log(N + a);
        std::complex<double> tail = std::exp((1.0 - s) * lz) / (s - 1.0);
        tail += 0.5 * std::exp(-s * lz);
        for (int r = 1; r <= bestJ; ++r) {
            tail += detail::bern_fact_ratio_signed(2 * r) * detail::pochhammer(s, 2 * r - 1) *
                    std::exp((-s - (2.0 * r - 1.0)) * lz);
        }
        const std::complex<double> val(re.result() + tail.real(), im.result() + tail.imag());
        // direct-sum magnitude governs the rounding term
        const double mag = std::abs(val) + std::pow(a, -s.real()) + 1.0;
        const double err = best + 4e-16 * mag + 1e-17 * N;
        if (err <= tol || last_round || floored) {
            if (err > tol && certify)
                throw convergence_error("hurwitz_zeta: cannot certify tolerance", val.real(), err);
            return {val, err};
        }
    }
    throw convergence_error("hurwitz_zeta: cannot certify tolerance", 0.0,
                            std::numeric_limits<double>::infinity());
}

inline WorkingComplex riemann_zeta(std::complex<double> s, double tol) {
    return hurwitz_zeta(s, 1.0, tol);
}

inline WorkingReal hurwitz_zeta_real(double s, double a, double tol) {
    auto z = hurwitz_zeta(std::complex<double>(s, 0.0), a, tol);
    return {z.value.real(), z.err};
}

inline WorkingReal riemann_zeta_real(double s, double tol) { return hurwitz_zeta_real(s, 1.0, tol); }

// Digamma by upward recurrence + asymptotic series, independent of the zeta
// engine so psi-based checks are genuinely independent cross-checks.
inline WorkingReal digamma(double a) {
    if (!(a > 0.0)) throw std::domain_error("digamma: a > 0");
    long double x = a;
    long double acc = 0.0;
    while (x < 24.0) {
        acc -= 1.0L / x;
        x += 1.0L;
    }
    long double v = std::log(x) - 1.0L / (2.0L * x);
    const long double x2 = 1.0L / (x * x);
    long double p = x2;
    // -sum B_{2j} / (2j x^{2j})
    static const long double b2j[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30,
                                      5.0L / 66, -691.0L / 2730, 7.0L / 6};
    for (int j = 1; j <= 7; ++j) {
        v -= b2j[j - 1] / (2 * j) * p;
        p *= x2;
    }
    return {static_cast<double>(v + acc), 1e-16 * (std::fabs(static_cast<double>(acc)) + 1.0)};
}

// psi^{(n)}(a) = (-1)^{n+1} n! zeta(n+1, a).
inline WorkingReal polygamma(int n, double a, double tol = 1e-13) {
    if (n < 1) throw std::domain_error("polygamma: n >= 1");
    if (!(a > 0.0)) throw std::domain_error("polygamma: a > 0");
    const double fac = static_cast<double>(kernel::factorial(n));
    auto z = hurwitz_zeta_real(static_cast<double>(n + 1), a, tol / fac);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return {sign * fac * z.value, fac * z.err};
}

// ---------------------------------------------------------------------------
// Hasse series machinery.  Inner alternating sums are forward-difference
// tables built incrementally (row n from row n-1) in extended precision;
// the 2^{-(n+1)} damping then gives geometric outer convergence.
// ---------------------------------------------------------------------------

namespace detail {

// sum_{n=0}^{cap} 2^{-(n+1)} Delta_n[f], Delta_n[f] = sum_k (-1)^k C(n,k) f(k),
// with f supplied on 0..cap.  Cancellation-flagged: runs in BigFloat.
struct EulerTransformResult {
    BigFloat value;
    double tail_estimate;
    int terms_used;
};

template <class F>
inline EulerTransformResult euler_transform(const F& f, int cap, double tol) {
    std::vector<BigFloat> row(static_cast<std::size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k) row[static_cast<std::size_t>(k)] = f(k);
    BigFloat sum = 0;
    BigFloat half = BigFloat(0.5);
    BigFloat w = half;  // 2^{-(n+1)}
    double last = std::numeric_limits<double>::infinity();
    int small_streak = 0;
    int n = 0;
    for (; n <= cap; ++n) {
        const BigFloat term = w * row[0];
        sum += term;
        last = std::fabs(static_cast<double>(term));
        if (n >= 8) {
            if (last < tol / 8.0)
                ++small_streak;
            else
                small_streak = 0;
            if (small_streak >= 3) break;
        }
        const std::size_t len = static_cast<std::size_t>(cap - n);
        for (std::size_t k = 0; k < len; ++k) row[k] -= row[k + 1];
        w *= half;
    }
    // Damped terms decay ~ geometrically with ratio <= 1/2 once settled.
    return {sum, 2.0 * last, std::min(n, cap)};
}

}  // namespace detail

// Eq-(11)-style globally convergent series:
// zeta(s) = 1/(1-2^{1-s}) sum_n 2^{-(n+1)} sum_k (-1)^k C(n,k) (k+1)^{-s}.
inline WorkingReal hasse1_zeta(double s, int terms, double tol) {
    if (s == 1.0) throw std::domain_error("hasse1_zeta: pole at s = 1");
    auto f = [&](int k) { return pow(BigFloat(k + 1), BigFloat(-s)); };
    auto et = detail::euler_transform(f, terms, tol);
    const BigFloat pre = 1 / (1 - pow(BigFloat(2), BigFloat(1.0 - s)));
    const double prefac = std::fabs(static_cast<double>(pre));
    const double v = static_cast<double>(pre * et.value);
    const double err = prefac * et.tail_estimate + 1e-16 * std::fabs(v);
    if (err > tol && et.terms_used >= terms)
        throw convergence_error("hasse1_zeta: term cap reached", v, err);
    return {v, err};
}

// The universal Prop-8 building block:
// sum_n 2^{-(n+1)} sum_k (-1)^k C(n,k) ln^j(k+1) (k+1)^{-s}.
inline WorkingReal hasse_log_sum(int j, double s, int terms, double tol) {
    if (j < 0) throw std::domain_error("hasse_log_sum: j >= 0");
    if (s < -6.5)
        throw std::domain_error("hasse_log_sum: s < -6 outside the certified range");
    auto f = [&](int k) {
        const BigFloat lk = log(BigFloat(k + 1));
        return pow(lk, j) * pow(BigFloat(k + 1), BigFloat(-s));
    };
    auto et = detail::euler_transform(f, terms, tol);
    const double v = static_cast<double>(et.value);
    const double err = et.tail_estimate + 1e-16 * std::fabs(v);
    if (err > tol && et.terms_used >= terms) {
        // For s < 0 the inner terms grow before the damping wins; fail loudly
        // rather than return a silently degraded value.
        throw convergence_error("hasse_log_sum: term cap reached", v, err);
    }
    return {v, err};
}

// zeta'(s) from the term-by-term derivative of the Hasse form:
// zeta'(s) = -ln2/(2^{s-1}-1) zeta(s) - 1/(1-2^{1-s}) * hasse_log_sum(1, s).
inline WorkingReal hasse1_zeta_prime(double s, double tol) {
    if (s == 1.0) throw std::domain_error("hasse1_zeta_prime: pole at s = 1");
    const double p2 = std::pow(2.0, s - 1.0);
    const double pre1 = -std::log(2.0) / (p2 - 1.0);
    const double pre2 = -1.0 / (1.0 - 1.0 / p2);
    // zeta(s) from the same globally convergent series: for s <= 0 the
    // Euler-Maclaurin route loses absolute accuracy to cancellation of the
    // large partial sums, while the damped binomial transform stays exact.
    const auto zs = hasse1_zeta(s, 220, tol / (4.0 * std::max(1.0, std::fabs(pre1))));
    const auto ls = hasse_log_sum(1, s, 220, tol / (4.0 * std::max(1.0, std::fabs(pre2))));
    const double v = pre1 * zs.value + pre2 * ls.value;
    return {v, std::fabs(pre1) * zs.err + std::fabs(pre2) * ls.err};
}

// ---------------------------------------------------------------------------
// Second (slower) Hasse series:
// zeta(s) = 1/(s-1) sum_l 1/(l+1) sum_k (-1)^k C(l,k) (k+1)^{-(s-1)}.
// For integer s >= 2 the inner difference has the closed form
//   Delta_l[(k+1)^{-m}] = h_{m-1}(1, 1/2, ..., 1/(l+1)) / (l+1),
// h_j the complete homogeneous symmetric polynomial, evaluated from running
// generalized harmonic numbers; the tail beyond the direct range is summed
// by midpoint Euler-Maclaurin using the polygamma extension of H^{(i)}.
// ---------------------------------------------------------------------------

namespace detail {

// h_{m-1} from power sums p_i via Newton's recurrence h_j = (1/j) sum p_i h_{j-i}.
inline double complete_homogeneous(const std::vector<double>& p, int top) {
    std::vector<double> h(static_cast<std::size_t>(top) + 1, 0.0);
    h[0] = 1.0;
    for (int j = 1; j <= top; ++j) {
        double acc = 0.0;
        for (int i = 1; i <= j; ++i) acc += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j - i)];
        h[static_cast<std::size_t>(j)] = acc / j;
    }
    return h[static_cast<std::size_t>(top)];
}

// Continuous extension of the l-th term of the second Hasse series for
// integer exponent m = s-1: t(x) = h_{m-1}(H-ext(x+1)) / ((s-1)(x+1)^2),
// H^{(1)}_x = gamma + psi(x+1), H^{(i)}_x = zeta(i) - (-1)^i psi^{(i-1)}(x+1)/(i-1)!.
inline double hasse2_term_ext(double x, int m, double s, double euler_gamma,
                              const std::vector<double>& zeta_i) {
    std::vector<double> p(static_cast<std::size_t>(m), 0.0);
    if (m - 1 >= 1) {
        p[1] = euler_gamma + digamma(x + 2.0).value;
        double fac = 1.0;  // (i-1)!
        for (int i = 2; i <= m - 1; ++i) {
            fac *= (i - 1);
            const double sign = (i % 2 == 0) ? -1.0 : 1.0;
            p[static_cast<std::size_t>(i)] =
                zeta_i[static_cast<std::size_t>(i)] - sign * polygamma(i - 1, x + 2.0).value / fac;
        }
    }
    const double h = complete_homogeneous(p, m - 1);
    return h / ((s - 1.0) * (x + 1.0) * (x + 1.0));
}

}  // namespace detail

inline WorkingReal hasse2_zeta(double s, int terms, double tol) {
    if (!(s > 1.0)) throw std::domain_error("hasse2_zeta: require s > 1");
    const double rounded = std::round(s - 1.0);
    const bool integral_exponent = std::fabs(s - 1.0 - rounded) < 1e-12 && rounded >= 1.0;
    if (integral_exponent) {
        const int m = static_cast<int>(rounded);
        const long L = std::max<long>(terms, 200000);
        // running power sums H^{(i)}_{l+1}
        std::vector<long double> H(static_cast<std::size_t>(m), 0.0L);
        std::vector<double> p(static_cast<std::size_t>(m), 0.0);
        kernel::CompensatedAccumulator acc;
        for (long l = 0; l < L; ++l) {
            const long double inv = 1.0L / static_cast<long double>(l + 1);
            long double pw = inv;
            for (int i = 1; i <= m - 1; ++i) {
                H[static_cast<std::size_t>(i)] += pw;
                p[static_cast<std::size_t>(i)] = static_cast<double>(H[static_cast<std::size_t>(i)]);
                pw *= inv;
            }
            const double h = detail::complete_homogeneous(p, m - 1);
            acc.add(h / ((s - 1.0) * static_cast<double>(l + 1) * static_cast<double>(l + 1)));
        }
        // tail: sum_{l >= L} t(l) ~ int_{L-1/2}^inf t(x) dx + (1/24) t'(L-1/2)
        const double gamma_val = -digamma(1.0).value;  // H^{(1)}_{x+1} = gamma + psi(x+2)
        std::vector<double> zs(static_cast<std::size_t>(std::max(2, m)), 0.0);
        for (int i = 2; i <= m - 1; ++i) zs[static_cast<std::size_t>(i)] = riemann_zeta_real(i, 1e-14).value;
        auto t = [&](double x) { return detail::hasse2_term_ext(x, m, s, gamma_val, zs); };
        const double A = static_cast<double>(L) - 0.5;
        // map x = A/theta, theta in (0,1]; mild log^m singularity at theta -> 0
        auto g = [&](double th) {
            const double x = A / th;
            return t(x) * A / (th * th);
        };
        std::vector<double> bp;
        for (double e = 1.0; e > 1e-10; e *= 0.5) bp.push_back(e);
        bp.push_back(0.0);
        std::reverse(bp.begin(), bp.end());
        auto tail_int = quad::integrate_adaptive(g, bp, tol / 8.0);
        const double h = 1e-3 * A;
        const double tprime = (t(A + h) - t(A - h)) / (2.0 * h);
        const double tail = tail_int.value + tprime / 24.0;
        const double v = acc.result() + tail;
        const double err = tail_int.error_bound + std::fabs(tprime) / 24.0 * 1e-2 +
                           std::fabs(t(A)) / (8.0 * A) + 1e-15 * std::fabs(v);
        return {v, err};
    }
    // General s: direct difference table (slowly convergent); report the
    // achieved bound honestly.
    const int cap = std::min(terms, 20000);
    std::vector<double> row(static_cast<std::size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k)
        row[static_cast<std::size_t>(k)] = std::pow(k + 1.0, -(s - 1.0));
    kernel::CompensatedAccumulator acc;
    double last = 0.0;
    for (int l = 0; l <= cap; ++l) {
        last = row[0] / (l + 1.0);
        acc.add(last);
        const std::size_t len = static_cast<std::size_t>(cap - l);
        for (std::size_t k = 0; k < len; ++k) row[k] -= row[k + 1];
    }
    const double v = acc.result() / (s - 1.0);
    const double err = std::fabs(last) * cap;  // crude: term ~ c/l^2 polylog
    if (err > tol) throw convergence_error("hasse2_zeta: slow series, cap reached", v, err);
    return {v, err};
}

}  // namespace sc::zeta

#endif
