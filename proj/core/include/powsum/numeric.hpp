// Exact integer and rational scalar types shared by every module.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace powsum {

// Arbitrary-precision signed integer. GMP keeps zero canonical and
// guarantees exact decimal round-trips.
using BigInt = mpz_class;

// Exact rational, always in lowest terms with positive denominator
// (mpq_class canonicalizes on construction from canonical parts; call
// make_rational to canonicalize arbitrary numerator/denominator pairs).
using Rational = mpq_class;

inline BigInt parse_bigint(const std::string& decimal) {
    return BigInt(decimal, 10);
}

inline std::string to_decimal(const BigInt& v) {
    return v.get_str(10);
}

// "p/q" with q omitted when the value is an integer.
inline std::string to_decimal(const Rational& v) {
    return v.get_str(10);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// Floor square root together with an exactness flag.
inline std::pair<BigInt, bool> sqrt_exact(const BigInt& v) {
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    return {root, rem == 0};
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace powsum
