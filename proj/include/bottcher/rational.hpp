#ifndef BOTTCHER_RATIONAL_HPP
#define BOTTCHER_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bottcher {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form we
// require (gcd-reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// base^e with e possibly negative (base must be nonzero in that case).
Rational pow_rational(const Rational& base, long e);

// Exact n-th root when it exists in Q: both numerator and denominator must be
// perfect n-th powers (negative base allowed for odd n).
std::optional<Rational> nth_root_rational(const Rational& a, unsigned long n);

// "p/q" with the "/q" omitted when q = 1.
std::string to_string(const Rational& q);

inline Rational abs_rational(const Rational& q)
{
    return q >= 0 ? q : Rational(-q);
}

} // namespace bottcher

#endif
