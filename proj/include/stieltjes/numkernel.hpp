#ifndef STIELTJES_NUMKERNEL_HPP
#define STIELTJES_NUMKERNEL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

// Exact combinatorics (Stirling, binomial, Bernoulli), Bernoulli polynomials
// and their periodic extension, compensated summation, and the incomplete
// gamma tail bounds used by every other module.

namespace sc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
// Extended working type for cancellation-flagged alternating sums: ~50
// decimal digits, far beyond the 10-extra-digit contract at the default
// 1e-13 target.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// A value together with the absolute error bound actually achieved.
// Operations taking a tolerance either meet it or report the larger bound
// here; silent precision loss is forbidden.
struct WorkingReal {
    double value{};
    double err{};
};

struct WorkingComplex {
    std::complex<double> value{};
    double err{};
};

// Thrown when an iterative scheme cannot certify the requested tolerance.
// Carries the best value and the bound that was achieved.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double partial, double bound)
        : std::runtime_error(what), partial_value(partial), achieved_bound(bound) {}
    double partial_value;
    double achieved_bound;
};

namespace kernel {

// ---------------------------------------------------------------------------
// Stirling numbers of the first kind (signed), exact.
// s(0,0)=1, s(n,0)=0 for n>=1, s(n,n)=1, s(n+1,m)=s(n,m-1)-n*s(n,m).
// Exact big integers: s(n,1)=(n-1)! exceeds 64 bits already at n=22.
// ---------------------------------------------------------------------------

namespace detail {

class StirlingTable {
  public:
    static StirlingTable& instance() {
        static StirlingTable t;
        return t;
    }

    BigInt get(int n, int m) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

  private:
    StirlingTable() { rows_.push_back({BigInt(1)}); }

    void ensure(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            const std::size_t k = rows_.size();  // building row k
            const auto& prev = rows_[k - 1];
            std::vector<BigInt> row(k + 1);
            row[0] = 0;
            row[k] = 1;
            for (std::size_t m = 1; m < k; ++m)
                row[m] = prev[m - 1] - BigInt(k - 1) * prev[m];
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

class BernoulliCache {
  public:
    static BernoulliCache& instance() {
        static BernoulliCache c;
        return c;
    }

    BigRat number(int j) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_numbers(j);
        return numbers_[static_cast<std::size_t>(j)];
    }

    // Coefficients of B_n(x) in descending powers: row[i] = C(n,i) B_i is the
    // coefficient of x^{n-i}.  Converted once to double for Horner use.
    const std::vector<double>& poly_row(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_numbers(n);
        while (static_cast<int>(poly_rows_.size()) <= n) {
            const int d = static_cast<int>(poly_rows_.size());
            std::vector<double> row(static_cast<std::size_t>(d) + 1);
            BigInt binom = 1;
            for (int i = 0; i <= d; ++i) {
                if (i > 0) binom = binom * (d - i + 1) / i;
                row[static_cast<std::size_t>(i)] =
                    static_cast<double>(BigRat(binom) * numbers_[static_cast<std::size_t>(i)]);
            }
            poly_rows_.push_back(std::move(row));
        }
        return poly_rows_[static_cast<std::size_t>(n)];
    }

  private:
    BernoulliCache() { numbers_.push_back(BigRat(1)); }

    void ensure_numbers(int j) {
        while (static_cast<int>(numbers_.size()) <= j) {
            const int n = static_cast<int>(numbers_.size());
            // sum_{i=0}^{n} C(n+1,i) B_i = 0  =>  B_n in exact rationals.
            BigRat acc = 0;
            BigInt binom = 1;  // C(n+1, i)
            for (int i = 0; i < n; ++i) {
                acc += BigRat(binom) * numbers_[static_cast<std::size_t>(i)];
                binom = binom * (n + 1 - i) / (i + 1);
            }
            numbers_.push_back(-acc / BigRat(binom));
        }
    }

    std::mutex mu_;
    std::vector<BigRat> numbers_;
    std::vector<std::vector<double>> poly_rows_;
};

}  // namespace detail

inline BigInt stirling_s1(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error("stirling_s1: require 0 <= m <= n");
    return detail::StirlingTable::instance().get(n, m);
}

inline BigRat bernoulli_number(int j) {
    if (j < 0) throw std::domain_error("bernoulli_number: j >= 0");
    return detail::BernoulliCache::instance().number(j);
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// B_n(x) by Horner on the exact coefficient row.  For x in [0,1] the
// coefficient-to-value ratio stays ~20 for all n, so double Horner holds a
// ~1.5-digit loss uniformly in n.
inline double bernoulli_poly(int n, double x) {
    if (n < 0) throw std::domain_error("bernoulli_poly: n >= 0");
    const auto& row = detail::BernoulliCache::instance().poly_row(n);
    double acc = 0.0;
    for (double c : row) acc = acc * x + c;
    return acc;
}

// P_n(x) = B_n(x - floor(x)), exactly periodic with period 1.
inline double periodic_bernoulli(int n, double x) {
    double y = x - std::floor(x);
    if (y >= 1.0) y = 0.0;  // guard against floor rounding at negative x
    return bernoulli_poly(n, y);
}

// Sup bound for |P_n|.  The classical bound is [3+(-1)^n] n! / (2pi)^n for
// n >= 2 (Lehmer); for n = 1 the sharp value is 1/2.  Note the n! factor:
// already |P_2(0)| = 1/6 exceeds 4/(2pi)^2.
inline double pn_sup_bound(int n) {
    if (n < 1) throw std::domain_error("pn_sup_bound: n >= 1");
    if (n == 1) return 0.5;
    double fac = 1.0;
    for (int i = 2; i <= n; ++i) fac *= i;
    return (3.0 + ((n % 2 == 0) ? 1.0 : -1.0)) * fac / std::pow(2.0 * M_PI, n);
}

// ---------------------------------------------------------------------------
// Upper incomplete gamma Gamma(a, z), a > 0, z >= 0.
// Series for z < a+1, Lentz continued fraction otherwise.
// ---------------------------------------------------------------------------
inline WorkingReal upper_incomplete_gamma(double a, double z) {
    if (!(a > 0.0) || z < 0.0)
        throw std::domain_error("upper_incomplete_gamma: a > 0, z >= 0");
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16;
    const double ga = std::tgamma(a);
    if (z == 0.0) return {ga, ga * 4 * kEps};

    const double lpre = a * std::log(z) - z - std::lgamma(a);
    if (z < a + 1.0) {
        // P(a,z) series, then Gamma(a,z) = Gamma(a) (1 - P).
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < kMaxIter; ++i) {
            ap += 1.0;
            del *= z / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * kEps) {
                const double p = sum * std::exp(lpre) * ga;  // = gamma(a,z)
                const double v = ga - p;
                return {v, 8 * kEps * (std::fabs(v) + std::fabs(p))};
            }
        }
        throw convergence_error("upper_incomplete_gamma: series stalled", ga * (1 - sum), 1.0);
    }
    // Continued fraction for Q(a,z).
    constexpr double kTiny = 1e-300;
    double b = z + 1.0 - a, c = 1.0 / kTiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            const double v = std::exp(lpre) * h * ga;
            return {v, 8 * kEps * std::fabs(v)};
        }
    }
    throw convergence_error("upper_incomplete_gamma: continued fraction stalled",
                            std::exp(lpre) * h * ga, 1.0);
}

// Neumaier compensated accumulation: error O(ulp) independent of length,
// deterministic for a fixed order.
class CompensatedAccumulator {
  public:
    void add(double x) {
        const double t = s_ + x;
        if (std::fabs(s_) >= std::fabs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double result() const { return s_ + c_; }

  private:
    double s_ = 0.0, c_ = 0.0;
};

inline WorkingReal compensated_sum(std::span<const double> terms) {
    CompensatedAccumulator acc;
    double mag = 0.0;
    for (double x : terms) {
        acc.add(x);
        mag += std::fabs(x);
    }
    // Neumaier bound: |sum - fl(sum)| <= 2 eps * sum |x_i| up to O(eps^2).
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.result(), 2.0 * eps * mag};
}

}  // namespace kernel
}  // namespace sc

#endif
