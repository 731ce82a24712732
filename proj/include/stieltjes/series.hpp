#ifndef STIELTJES_SERIES_HPP
#define STIELTJES_SERIES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

// Truncated Laurent/Taylor series about s = 1 in the variable u = s-1.
// Used to assemble the Hasse-series expansions and to convert between the
// gamma_k and eta_j coefficient streams.

namespace sc::series {

// pole/u + sum c_k u^k, exact through order K = c.size()-1.
// A -ln(u) term arising from log of a simple pole is carried symbolically
// in has_log_pole, never numerically.
struct LaurentSeries {
    double pole = 0.0;
    std::vector<double> c;
    bool has_log_pole = false;

    int order() const { return static_cast<int>(c.size()) - 1; }

    static LaurentSeries analytic(std::vector<double> coeffs) {
        return {0.0, std::move(coeffs), false};
    }
    static LaurentSeries simple_pole(double p, std::vector<double> coeffs) {
        return {p, std::move(coeffs), false};
    }
};

// Product truncated to the smaller order.  At most one factor may carry a
// pole part.
inline LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.pole != 0.0 && b.pole != 0.0)
        throw std::invalid_argument("series_mul: both factors singular");
    if (a.has_log_pole || b.has_log_pole)
        throw std::invalid_argument("series_mul: symbolic log pole not closed under *");
    const LaurentSeries& p = (b.pole != 0.0) ? b : a;  // the (possibly) singular one
    const LaurentSeries& q = (b.pole != 0.0) ? a : b;
    const int K = std::min(p.order(), q.order());
    LaurentSeries r;
    r.c.assign(static_cast<std::size_t>(K) + 1, 0.0);
    // (pole/u) * q
    if (p.pole != 0.0) {
        r.pole = p.pole * q.c[0];
        for (int k = 0; k <= K; ++k)
            if (k + 1 <= q.order()) r.c[static_cast<std::size_t>(k)] += p.pole * q.c[static_cast<std::size_t>(k + 1)];
    }
    for (int k = 0; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j)
            acc += p.c[static_cast<std::size_t>(j)] * q.c[static_cast<std::size_t>(k - j)];
        r.c[static_cast<std::size_t>(k)] += acc;
    }
    return r;
}

// log of a series.  Analytic input needs c0 > 0.  A simple pole p/u with
// p > 0 is accepted: ln(p/u * (u*a/p)) = -ln u + ln(u*a), the -ln u recorded
// symbolically via has_log_pole.
inline LaurentSeries series_log(const LaurentSeries& a) {
    LaurentSeries work;
    bool from_pole = false;
    if (a.pole != 0.0) {
        if (a.pole < 0.0) throw std::domain_error("series_log: pole coefficient <= 0");
        // u * a(u) = pole + c0 u + c1 u^2 + ... (one order is consumed).
        work.c.reserve(a.c.size() + 1);
        work.c.push_back(a.pole);
        for (double v : a.c) work.c.push_back(v);
        from_pole = true;
    } else {
        work = a;
    }
    if (work.c.empty() || work.c[0] <= 0.0)
        throw std::domain_error("series_log: constant term must be positive");
    const int K = work.order();
    LaurentSeries r;
    r.c.assign(static_cast<std::size_t>(K) + 1, 0.0);
    r.c[0] = std::log(work.c[0]);
    // Standard power-series log recurrence: k l_k = k c_k/c0 - sum_{j=1}^{k-1} j l_j c_{k-j}/c0.
    for (int k = 1; k <= K; ++k) {
        double acc = k * work.c[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j)
            acc -= j * r.c[static_cast<std::size_t>(j)] * work.c[static_cast<std::size_t>(k - j)];
        r.c[static_cast<std::size_t>(k)] = acc / (k * work.c[0]);
    }
    r.has_log_pole = from_pole;
    return r;
}

// exp of an analytic series; inverse of series_log on the analytic branch.
inline LaurentSeries series_exp(const LaurentSeries& a) {
    if (a.pole != 0.0 || a.has_log_pole)
        throw std::invalid_argument("series_exp: analytic input required");
    const int K = a.order();
    LaurentSeries r;
    r.c.assign(static_cast<std::size_t>(K) + 1, 0.0);
    r.c[0] = std::exp(a.c[0]);
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += j * a.c[static_cast<std::size_t>(j)] * r.c[static_cast<std::size_t>(k - j)];
        r.c[static_cast<std::size_t>(k)] = acc / k;
    }
    return r;
}

// Reciprocal of a series with a simple zero at u = 0: a = c1 u + c2 u^2 + ...
// Result is pole/u + analytic, with pole = 1/c1.
inline LaurentSeries series_reciprocal_simple_zero(const LaurentSeries& a) {
    if (a.pole != 0.0) throw std::domain_error("series_reciprocal_simple_zero: no pole part allowed");
    if (a.order() < 1 || a.c[0] != 0.0 || a.c[1] == 0.0)
        throw std::domain_error("series_reciprocal_simple_zero: need c0 = 0, c1 != 0");
    // a = u * b(u), b0 = c1; 1/a = (1/u) * (1/b).
    const int K = a.order() - 1;
    std::vector<double> b(a.c.begin() + 1, a.c.end());
    std::vector<double> inv(static_cast<std::size_t>(K) + 1, 0.0);
    inv[0] = 1.0 / b[0];
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += b[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc / b[0];
    }
    LaurentSeries r;
    r.pole = inv[0];
    r.c.assign(inv.begin() + 1, inv.end());
    return r;
}

}  // namespace sc::series

#endif
