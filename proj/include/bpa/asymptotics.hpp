#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpa/bignat.hpp"
#include "bpa/errors.hpp"
#include "bpa/exact.hpp"
#include "bpa/real.hpp"

// Arbitrary-precision evaluation of the infinite-series and asymptotic
// representations of the counting sequences, each paired with a rigorous
// error bound so the exact integer can be recovered by rounding.

namespace bpa {

// Value plus a bound such that [value - error_bound, value + error_bound]
// contains the true quantity.
struct ApproxValue {
    Real value;
    Real error_bound;
    mpfr_prec_t precision_bits;

    bool contains(const mpz_class& exact) const {
        const mpfr_prec_t p = std::max<mpfr_prec_t>(
            value.precision(),
            static_cast<mpfr_prec_t>(mpz_sizeinbase(exact.get_mpz_t(), 2) + 16));
        Real diff = (value.at_precision(p) - Real::of(exact, p)).abs();
        return diff <= error_bound;
    }

    mpz_class round_nearest() const { return value.round_nearest(); }

    // Rounding is only trusted when the interval pins a single integer.
    mpz_class certified_integer() const {
        if (!(error_bound < Real::of(0.5, 64)))
            throw precision_error("error bound " + error_bound.str() +
                                  " does not isolate an integer");
        return round_nearest();
    }
};

namespace detail {

// Upper bound inflated by a relative margin that dominates every rounding
// error the evaluation can have accumulated at working precision.
inline Real upper_slack(const Real& x, mpfr_prec_t work) {
    return x + x.abs().mul_2exp(-static_cast<long>(work / 2));
}

inline Real rounding_slop(const Real& value, mpfr_prec_t work) {
    return (value.abs() + Real::of(1ul, work)).mul_2exp(-static_cast<long>(work) + 48);
}

} // namespace detail

// T_n(x) by the three-term recurrence, valid on [-1, 1].
inline Real chebyshev_T(unsigned long n, const Real& x) {
    const mpfr_prec_t prec = x.precision();
    const Real one = Real::of(1ul, prec);
    if (x.abs() > one)
        throw std::domain_error("chebyshev_T: |x| must be <= 1");
    if (n == 0) return one;
    Real prev = one;
    Real cur = x;
    const Real two_x = x.mul_2exp(1);
    for (unsigned long k = 1; k < n; ++k) {
        Real next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // |T_n| <= 1 on the domain; drift beyond a half-ulp margin means the
    // recurrence lost precision.
    if (cur.abs() > one + Real::of(1ul, prec).mul_2exp(-static_cast<long>(prec / 2)))
        throw internal_error("chebyshev_T: recurrence left [-1, 1]");
    return cur;
}

inline double chebyshev_T(unsigned long n, double x) {
    if (std::abs(x) > 1.0)
        throw std::domain_error("chebyshev_T: |x| must be <= 1");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (unsigned long k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// A pending evaluation of T_degree at a point of [-1, 1].
struct ChebyshevEval {
    unsigned long degree;
    Real point;
    Real value() const { return chebyshev_T(degree, point); }
};

// x(x+1)...(x+m-1); the empty product is 1.
inline mpz_class rising_factorial(const mpz_class& x, unsigned long m) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < m; ++i) r *= x + static_cast<long>(i);
    return r;
}

inline Real rising_factorial(const Real& x, unsigned long m) {
    Real r = Real::of(1ul, x.precision());
    for (unsigned long i = 0; i < m; ++i) r *= x + Real::of(i, x.precision());
    return r;
}

namespace detail {

struct SeriesAccum {
    Real sum;
    Real tail_bound; // on the raw (unprefactored) terms
    unsigned long terms = 0;
};

// Sum t_k = w(k) * k^l / 2^k for k = 0, 1, ... past the peak near
// (l + weight_degree)/log 2, stopping once the geometric tail bound
// 2 t_k / (1 - t_k / t_{k-1}) sinks below eps_raw. Term ratios decrease in
// k, so once below 1 they stay below the measured ratio and the bound is
// valid.
template <typename WeightFn>
SeriesAccum exponential_tail_sum(unsigned long l, unsigned long weight_degree, WeightFn&& weight,
                                 const Real& eps_raw, mpfr_prec_t work,
                                 std::vector<std::string>* trace) {
    SeriesAccum acc{Real(work), Real(work), 0};
    const double peak = static_cast<double>(l + weight_degree) / std::log(2.0);
    Real prev_term(work);
    bool prev_positive = false;

    for (unsigned long k = 0;; ++k) {
        if (k > 2000000ul)
            throw precision_error("series did not certify the requested bound");
        mpz_class numer = weight(k) * pow_ui(k, l);
        Real term = Real::of(numer, work).mul_2exp(-static_cast<long>(k));
        acc.sum += term;
        ++acc.terms;
        if (trace)
            trace->push_back("k=" + std::to_string(k) + " term=" + term.str() +
                             " partial=" + acc.sum.str());
        if (static_cast<double>(k) > peak && prev_positive) {
            Real ratio = term / prev_term;
            if (ratio < Real::of(1ul, work)) {
                Real bound = term.mul_2exp(1) / (Real::of(1ul, work) - ratio);
                if (bound < eps_raw) {
                    acc.tail_bound = upper_slack(bound, work);
                    return acc;
                }
            }
        }
        prev_positive = term.sign() > 0;
        prev_term = std::move(term);
    }
}

} // namespace detail

// r(l) = (1/2) sum_k k^l / 2^k, summed until a geometric bound certifies the
// truncation error below eps.
inline ApproxValue gross_series_r(unsigned long l, double eps, mpfr_prec_t bits,
                                  std::vector<std::string>* trace = nullptr) {
    if (eps <= 0) throw std::invalid_argument("gross_series_r: eps must be positive");
    const mpfr_prec_t work = bits + 32;
    const Real eps_raw = Real::of(eps, work);
    auto acc = detail::exponential_tail_sum(
        l, 0, [](unsigned long) { return mpz_class(1); }, eps_raw, work, trace);

    Real value = acc.sum.mul_2exp(-1);
    Real slop = detail::rounding_slop(value, work) * (acc.terms + 8);
    if (!(slop < Real::of(eps, work).mul_2exp(-1)))
        throw precision_error("gross_series_r: precision too low to certify eps");
    return ApproxValue{value, acc.tail_bound.mul_2exp(-1) + slop, bits};
}

// r(m,l) = (1/(2^(m+1) m!)) sum_k (k+1)^(rising m) k^l / 2^k, m >= 1.
inline ApproxValue gross_series_barred(unsigned long m, unsigned long l, double eps,
                                       mpfr_prec_t bits,
                                       std::vector<std::string>* trace = nullptr) {
    if (m < 1) throw std::invalid_argument("gross_series_barred requires m >= 1");
    if (eps <= 0) throw std::invalid_argument("gross_series_barred: eps must be positive");
    const mpfr_prec_t work = bits + 32;
    const Real denom = Real::of(factorial(m), work).mul_2exp(static_cast<long>(m) + 1);
    const Real eps_raw = Real::of(eps, work) * denom;
    auto acc = detail::exponential_tail_sum(
        l, m,
        [m](unsigned long k) { return rising_factorial(mpz_class(k) + 1, m); },
        eps_raw, work, trace);

    Real value = acc.sum / denom;
    Real slop = detail::rounding_slop(value, work) * (acc.terms + 8);
    if (!(slop < Real::of(eps, work).mul_2exp(-1)))
        throw precision_error("gross_series_barred: precision too low to certify eps");
    return ApproxValue{value, acc.tail_bound / denom + slop, bits};
}

namespace detail {

// rho_k = sqrt((log 2)^2 + 4 pi^2 k^2), the distance of the k-th conjugate
// pole pair from the origin.
inline Real rho_k(unsigned long k, const Real& ln2, const Real& pi) {
    Real pik = pi * (2 * k);
    return (ln2 * ln2 + pik * pik).sqrt();
}

// Rigorous bound on sum_{k > K} l! / rho_k^(l+1): first term plus an
// integral comparison, every Chebyshev factor replaced by 1.
inline Real convergent_tail_bound(unsigned long l, unsigned long terms, mpfr_prec_t work) {
    const Real ln2 = Real::log2_const(work);
    const Real pi = Real::pi_const(work);
    const Real fact = Real::of(factorial(l), work);
    Real first = fact / rho_k(terms + 1, ln2, pi).pow_ui(l + 1);
    Real integral = fact / (pi.mul_2exp(1).pow_ui(l + 1) *
                            Real::of(pow_ui(terms + 1, l), work) * Real::of(l, work));
    return upper_slack(first + integral, work);
}

} // namespace detail

// Leading term l!/(2 (log 2)^(l+1)) of r(l), with the error certified by the
// rigorous tail of the convergent series rather than an assumed constant.
inline ApproxValue asymptotic_leading(unsigned long l, mpfr_prec_t bits) {
    if (l < 1) throw std::invalid_argument("asymptotic_leading requires l >= 1");
    const mpfr_prec_t work = bits + 32;
    const Real ln2 = Real::log2_const(work);
    Real value = Real::of(factorial(l), work) / ln2.pow_ui(l + 1).mul_2exp(1);
    Real err = detail::convergent_tail_bound(l, 0, work) + detail::rounding_slop(value, work);
    return ApproxValue{value, err, bits};
}

// r(l) = l!/(2 (log 2)^(l+1))
//        + sum_{k>=1} l! rho_k^-(l+1) T_{l+1}(log 2 / rho_k),
// truncated after `terms` pair contributions. Convergent and asymptotic: the
// reported bound is a small multiple of the first omitted term.
inline ApproxValue convergent_series_r(unsigned long l, unsigned long terms, mpfr_prec_t bits,
                                       std::vector<std::string>* trace = nullptr) {
    if (l < 1) throw std::invalid_argument("convergent_series_r requires l >= 1");
    const mpfr_prec_t work = bits + 32;
    const Real ln2 = Real::log2_const(work);
    const Real pi = Real::pi_const(work);
    const Real fact = Real::of(factorial(l), work);

    Real sum = fact / ln2.pow_ui(l + 1).mul_2exp(1);
    if (trace) trace->push_back("main=" + sum.str());
    for (unsigned long k = 1; k <= terms; ++k) {
        Real rho = detail::rho_k(k, ln2, pi);
        Real cheb = chebyshev_T(l + 1, ln2 / rho);
        Real term = fact / rho.pow_ui(l + 1) * cheb;
        sum += term;
        if (trace)
            trace->push_back("k=" + std::to_string(k) + " term=" + term.str() +
                             " partial=" + sum.str());
    }
    Real err = detail::convergent_tail_bound(l, terms, work) +
               detail::rounding_slop(sum, work) * (terms + l + 8);
    return ApproxValue{sum, err, bits};
}

// r(m,l) = (1/(2^m m!)) sum_i c(m+1, i+1) * [convergent series at l+i].
inline ApproxValue convergent_series_barred(unsigned long m, unsigned long l,
                                            unsigned long terms, mpfr_prec_t bits,
                                            std::vector<std::string>* trace = nullptr) {
    if (l < 1) throw std::invalid_argument("convergent_series_barred requires l >= 1");
    const mpfr_prec_t work = bits + 32;
    Real acc_val(work);
    Real acc_err(work);
    for (unsigned long i = 0; i <= m; ++i) {
        const Real w = Real::of(stirling1_unsigned(m + 1, i + 1), work);
        ApproxValue part = convergent_series_r(l + i, terms, bits, trace);
        acc_val += w * part.value;
        acc_err += w * part.error_bound;
    }
    const Real denom = Real::of(factorial(m), work).mul_2exp(static_cast<long>(m));
    Real value = acc_val / denom;
    Real err = detail::upper_slack(acc_err / denom, work) + detail::rounding_slop(value, work);
    return ApproxValue{value, err, bits};
}

// sum_{r=1..s} c(s,r) x^r = x(x+1)...(x+s-1), exactly over the integers.
inline bool check_stirling_rising_identity(const mpz_class& x, unsigned long s) {
    if (s < 1) throw std::invalid_argument("check_stirling_rising_identity requires s >= 1");
    mpz_class lhs = 0;
    mpz_class xp = 1;
    for (unsigned long r = 1; r <= s; ++r) {
        xp *= x;
        lhs += stirling1_unsigned(s, r) * xp;
    }
    return lhs == rising_factorial(x, s);
}

} // namespace bpa
