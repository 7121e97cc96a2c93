#include "bottcher/rational.hpp"

#include "bottcher/errors.hpp"

namespace bottcher {

Rational pow_rational(const Rational& base, long e)
{
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            raise("DivisionByZero", "0 cannot be raised to a negative power");
        return Rational(0);
    }
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    r.canonicalize();
    if (e < 0)
        return Rational(1) / r;
    return r;
}

std::optional<Rational> nth_root_rational(const Rational& a, unsigned long n)
{
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return a;
    if (a == 0)
        return Rational(0);
    if (a < 0 && n % 2 == 0)
        return std::nullopt;

    Integer num = a.get_num();
    Integer den = a.get_den();
    Integer rnum, rden;
    bool num_exact = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n) != 0;
    bool den_exact = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n) != 0;
    if (!num_exact || !den_exact)
        return std::nullopt;
    Rational r(rnum, rden);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace bottcher
