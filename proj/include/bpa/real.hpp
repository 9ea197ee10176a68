#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "bpa/errors.hpp"

namespace bpa {

// Arbitrary-precision real. Precision is a per-value property fixed at
// construction; binary operations carry the larger operand precision.
// Rounding is always to nearest.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    static Real of(unsigned long u, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui(r.v_, u, MPFR_RNDN);
        return r;
    }

    static Real of(double d, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }

    static Real of(const mpz_class& z, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static Real log2_const(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }

    static Real pi_const(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(joint_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator-(const Real& a, const Real& b) {
        Real r(joint_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator*(const Real& a, const Real& b) {
        Real r(joint_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator/(const Real& a, const Real& b) {
        Real r(joint_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend Real operator*(const Real& a, unsigned long u) {
        Real r(a.precision());
        mpfr_mul_ui(r.v_, a.v_, u, MPFR_RNDN);
        return r;
    }

    friend Real operator/(const Real& a, unsigned long u) {
        Real r(a.precision());
        mpfr_div_ui(r.v_, a.v_, u, MPFR_RNDN);
        return r;
    }

    Real pow_ui(unsigned long e) const {
        Real r(precision());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    Real sqrt() const {
        Real r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real abs() const {
        Real r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real neg() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // Exact scaling by powers of two.
    Real mul_2exp(long e) const {
        Real r(precision());
        if (e >= 0)
            mpfr_mul_2ui(r.v_, v_, static_cast<unsigned long>(e), MPFR_RNDN);
        else
            mpfr_div_2ui(r.v_, v_, static_cast<unsigned long>(-e), MPFR_RNDN);
        return r;
    }

    // Value at a different precision (rounding to nearest if narrower).
    Real at_precision(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpz_class round_nearest() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(std::size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static mpfr_prec_t joint_prec(const Real& a, const Real& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

    mpfr_t v_;
};

} // namespace bpa
