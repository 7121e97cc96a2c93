#ifndef BOTTCHER_POLY_HPP
#define BOTTCHER_POLY_HPP

#include "bottcher/cyclotomic.hpp"

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bottcher {

/* Dense univariate polynomial over the cyclotomic scalars, ascending
 * coefficients. The zero polynomial is the empty vector; otherwise the
 * leading coefficient is nonzero. */
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Cyclotomic> coeffs);
    Poly(std::initializer_list<Cyclotomic> coeffs);

    static Poly t();                        // the identity t
    static Poly constant(const Cyclotomic& c);
    static Poly monomial(const Cyclotomic& c, int degree);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Cyclotomic& lead() const;
    Cyclotomic coeff(int i) const; // 0 outside range
    const std::vector<Cyclotomic>& coeffs() const noexcept { return c_; }

    bool is_monic() const;
    // All coefficients rational (conductor-1 values).
    std::optional<std::vector<Rational>> rational_coeffs() const;

    Cyclotomic eval(const Cyclotomic& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Cyclotomic& s, const Poly& p);

    Poly pow(unsigned e) const;
    // p(q(t)), exact.
    Poly composed_with(const Poly& q) const;
    // n-fold self-composition, n >= 1.
    Poly iterate(int n) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // "t^3 - 3*t" style: descending exponents, unit coefficients omitted,
    // non-monomial scalars parenthesized. Reparses to an equal value.
    std::string to_string() const;

  private:
    void normalize();
    std::vector<Cyclotomic> c_;
};

Poly operator*(const Poly& p, const Cyclotomic& s);

namespace detail {
// Appends "coef*var^e" to a sum being streamed; shared by the polynomial and
// series formatters so both print identically.
void print_term(std::ostream& out, bool& first, const Cyclotomic& coef, int e,
                const char* var);
} // namespace detail

} // namespace bottcher

#endif
