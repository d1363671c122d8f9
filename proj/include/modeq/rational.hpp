#ifndef MODEQ_RATIONAL_HPP
#define MODEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace modeq {

// Exact arithmetic is delegated to GMP. mpq_class keeps the canonical form
// (positive denominator, gcd(num, den) = 1, zero as 0/1) through arithmetic
// as long as values are constructed canonically, which the helpers below
// guarantee.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat rat(long num, long den = 1) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt int_from_string(const std::string& s) { return BigInt(s); }

// log of a positive BigInt, accurate to a few ulps even for huge values.
double log_bigint(const BigInt& x);

// log of |num/den| for a nonzero rational.
double log_abs(const BigRat& x);

bool is_integer(const BigRat& x);

} // namespace modeq

#endif
