#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "bpa/bignat.hpp"
#include "bpa/errors.hpp"

// Truncated power series over exact rationals. Used to realize the
// generating functions r_m(z) = 1/(2-e^z)^(m+1) and
// s_m(z) = ((e^z-1)/(2-e^z))^(m+1) and re-derive every sequence value by a
// route independent of the integer formulas.

namespace bpa {

class ExactSeries {
public:
    // Zero series of the given truncation order (coefficients c_0..c_order).
    explicit ExactSeries(std::size_t order) : c_(order + 1) {}

    static ExactSeries constant(const mpq_class& v, std::size_t order) {
        ExactSeries s(order);
        s.c_[0] = v;
        return s;
    }

    // exp(z): coefficients 1/j!.
    static ExactSeries exp(std::size_t order) {
        ExactSeries s(order);
        mpq_class c = 1;
        s.c_[0] = c;
        for (std::size_t j = 1; j <= order; ++j) {
            c /= static_cast<unsigned long>(j);
            s.c_[j] = c;
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const mpq_class& operator[](std::size_t j) const { return c_.at(j); }
    mpq_class& operator[](std::size_t j) { return c_.at(j); }

    // Mismatched orders truncate to the smaller one.
    ExactSeries add(const ExactSeries& o) const {
        ExactSeries out(std::min(order(), o.order()));
        for (std::size_t j = 0; j <= out.order(); ++j) out.c_[j] = c_[j] + o.c_[j];
        return out;
    }

    ExactSeries sub(const ExactSeries& o) const {
        ExactSeries out(std::min(order(), o.order()));
        for (std::size_t j = 0; j <= out.order(); ++j) out.c_[j] = c_[j] - o.c_[j];
        return out;
    }

    ExactSeries scale(const mpq_class& v) const {
        ExactSeries out(order());
        for (std::size_t j = 0; j <= order(); ++j) out.c_[j] = c_[j] * v;
        return out;
    }

    // Truncated Cauchy product.
    ExactSeries mul(const ExactSeries& o) const {
        ExactSeries out(std::min(order(), o.order()));
        for (std::size_t j = 0; j <= out.order(); ++j) {
            mpq_class sum = 0;
            for (std::size_t k = 0; k <= j; ++k) sum += c_[k] * o.c_[j - k];
            out.c_[j] = sum;
        }
        return out;
    }

    // Multiplicative inverse via the convolution recurrence; needs a nonzero
    // constant term.
    ExactSeries invert() const {
        if (c_[0] == 0)
            throw std::invalid_argument("ExactSeries::invert: zero constant term");
        ExactSeries out(order());
        out.c_[0] = mpq_class(1) / c_[0];
        for (std::size_t j = 1; j <= order(); ++j) {
            mpq_class sum = 0;
            for (std::size_t k = 1; k <= j; ++k) sum += c_[k] * out.c_[j - k];
            out.c_[j] = -sum / c_[0];
        }
        return out;
    }

    ExactSeries pow(unsigned long p) const {
        ExactSeries result = constant(1, order());
        ExactSeries base = *this;
        while (p > 0) {
            if (p & 1ul) result = result.mul(base);
            base = base.mul(base);
            p >>= 1;
        }
        return result;
    }

    // Coefficientwise derivative; drops the order by one.
    ExactSeries derivative() const {
        if (order() == 0)
            throw std::invalid_argument("ExactSeries::derivative: order 0");
        ExactSeries out(order() - 1);
        for (std::size_t j = 0; j + 1 <= order(); ++j)
            out.c_[j] = c_[j + 1] * static_cast<unsigned long>(j + 1);
        return out;
    }

    bool operator==(const ExactSeries&) const = default;

private:
    std::vector<mpq_class> c_;
};

namespace detail {

// 2 - e^z to the given order.
inline ExactSeries two_minus_exp(std::size_t order) {
    return ExactSeries::constant(2, order).sub(ExactSeries::exp(order));
}

} // namespace detail

// EGF of the m-bar counts: 1/(2 - e^z)^(m+1); l! * c_l = r(m,l).
inline ExactSeries egf_r(unsigned long m, std::size_t order) {
    return detail::two_minus_exp(order).invert().pow(m + 1);
}

// EGF of the no-empty-section counts: ((e^z - 1)/(2 - e^z))^(m+1);
// l! * c_l = s(m,l), constant term 0.
inline ExactSeries egf_s(unsigned long m, std::size_t order) {
    ExactSeries numer = ExactSeries::exp(order).sub(ExactSeries::constant(1, order));
    return numer.mul(detail::two_minus_exp(order).invert()).pow(m + 1);
}

// l! * c_l, which must come out a nonnegative integer for counting EGFs.
inline BigNat egf_coefficient(const ExactSeries& s, std::size_t l) {
    mpq_class v = s[l] * mpq_class(factorial(l));
    if (v.get_den() != 1)
        throw internal_error("egf_coefficient: l! * c_l is not an integer: " + v.get_str());
    if (v < 0)
        throw internal_error("egf_coefficient: negative count: " + v.get_str());
    return v.get_num();
}

// d/dz r_{m-1}(z) + m * r_{m-1}(z) = 2m * r_m(z), checked coefficientwise
// for z^j, j <= max(order-1, 0).
inline bool check_derivative_identity(unsigned long m, std::size_t order) {
    if (m < 1)
        throw std::invalid_argument("check_derivative_identity requires m >= 1");
    const std::size_t upto = order == 0 ? 0 : order - 1;
    ExactSeries prev = egf_r(m - 1, upto + 1);
    ExactSeries lhs = prev.derivative().add(prev.scale(static_cast<unsigned long>(m)));
    ExactSeries rhs = egf_r(m, upto).scale(mpq_class(2 * m));
    for (std::size_t j = 0; j <= upto; ++j)
        if (lhs[j] != rhs[j]) return false;
    return true;
}

} // namespace bpa
