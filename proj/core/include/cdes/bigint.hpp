#pragma once

#include <gmpxx.h>

#include <string>

namespace cdes {

/// Exact signed integer. Public counts are nonnegative; alternating sums
/// may pass through negative values on the way.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// base^exp by repeated squaring (GMP's mpz_pow_ui).
inline BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline BigInt ipow(unsigned long base, unsigned long exp) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
}

inline BigInt factorial(unsigned long n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace cdes
