#pragma once

// Exact scalar types. Every value in the library is either an arbitrary
// precision integer or a canonical rational; there is no floating point.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fibconv {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational pow2(long e);

// (-1)^e
inline int alt_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace fibconv
