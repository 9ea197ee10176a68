#pragma once

#include <gmpxx.h>

#include "bpa/errors.hpp"

namespace bpa {

// All exact counts are arbitrary-precision nonnegative integers.
using BigNat = mpz_class;
// Signed intermediate values (inclusion-exclusion sums).
using BigInt = mpz_class;

inline BigNat factorial(unsigned long n) {
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigNat pow2(unsigned long n) {
    BigNat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

inline BigNat pow_ui(unsigned long base, unsigned long exp) {
    BigNat r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Division that an identity guarantees to be exact; a remainder means the
// surrounding computation is wrong, so it is reported, never truncated.
inline BigNat exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw internal_error(std::string(context) + ": " + num.get_str() +
                             " is not divisible by " + den.get_str());
    }
    BigNat q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace bpa
