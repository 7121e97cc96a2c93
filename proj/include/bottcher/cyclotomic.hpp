#ifndef BOTTCHER_CYCLOTOMIC_HPP
#define BOTTCHER_CYCLOTOMIC_HPP

#include "bottcher/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bottcher {

/* Coefficient arithmetic in the directed union of cyclotomic fields Q(zeta_n).
 * Every root of unity the dichotomy theorems mention lives here, and all
 * arithmetic stays exact and decidable. Conductors are capped (default 120)
 * so phi(n) stays desk-sized; exceeding the cap is an explicit error. */

int conductor_cap() noexcept;
void set_conductor_cap(int cap);

// Euler phi and the n-th cyclotomic polynomial Phi_n (monic, ascending
// coefficients). Phi_n is computed once by dividing x^n - 1 by Phi_e over the
// proper divisors e | n and cached; the cache fill is idempotent and safe
// under concurrent first use.
int euler_phi(int n);
const std::vector<Rational>& cyclotomic_polynomial(int n);

class Cyclotomic;

// A root of unity in canonical form: zeta_order^exponent with
// gcd(exponent, order) = 1, 0 <= exponent < order, and (1, 0) for the value 1.
class RootOfUnity {
  public:
    RootOfUnity() : order_(1), exp_(0) {}
    RootOfUnity(long order, long exponent);

    int order() const noexcept { return order_; }
    int exponent() const noexcept { return exp_; }

    Cyclotomic value() const;
    RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exp_); }
    RootOfUnity pow(long k) const { return RootOfUnity(order_, static_cast<long>(exp_) * k); }
    RootOfUnity times(const RootOfUnity& other) const;

    bool operator==(const RootOfUnity& o) const noexcept
    {
        return order_ == o.order_ && exp_ == o.exp_;
    }
    bool operator!=(const RootOfUnity& o) const noexcept { return !(*this == o); }

    std::string to_string() const; // "1", "-1", or "zeta(n)^k"

  private:
    int order_;
    int exp_;
};

/* Element of Q(zeta_n) = Q[x]/(Phi_n) in the power basis 1, zeta, ...,
 * zeta^{phi(n)-1}. The conductor records which field the value currently
 * lives in; arithmetic embeds both operands into Q(zeta_lcm) and does not
 * minimize the conductor afterwards. Values are immutable. */
class Cyclotomic {
  public:
    Cyclotomic() : conductor_(1), coords_(1, Rational(0)) {}
    Cyclotomic(const Rational& q) : conductor_(1), coords_(1, q) {}
    Cyclotomic(long v) : conductor_(1), coords_(1, Rational(v)) {}
    Cyclotomic(int v) : conductor_(1), coords_(1, Rational(v)) {}

    // zeta_n as an element of conductor n.
    static Cyclotomic zeta(int n);
    // Coordinates are reduced mod Phi_n; size must be <= n (a polynomial in
    // zeta_n of any degree < n is accepted and reduced).
    static Cyclotomic from_coords(int conductor, std::vector<Rational> coords);

    int conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    // Embed into Q(zeta_m); requires conductor | m.
    Cyclotomic embedded(int m) const;
    // Recognize the value inside Q(zeta_n) for n | conductor, if it lies there.
    std::optional<Cyclotomic> descended(int n) const;
    // Smallest-conductor representation among divisors of the current one.
    Cyclotomic minimized() const;

    Cyclotomic operator-() const;
    Cyclotomic inverse() const; // DivisionByZero on 0
    Cyclotomic pow(long e) const;
    // Complex conjugate (zeta -> zeta^{-1}).
    Cyclotomic conj() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Canonical (order, exponent) when the value is a root of unity.
    std::optional<RootOfUnity> as_root_of_unity() const;

    // Parseable by the expression grammar: "-3/2", "zeta(12)^7",
    // "1/2 + 3*zeta(5)^2 - zeta(5)^3", ...
    std::string to_string() const;

  private:
    int conductor_;
    std::vector<Rational> coords_; // length phi(conductor_)
};

// x with x^n = a, when one exists of the form rational * root-of-unity.
// Roots that only exist as longer cyclotomic combinations (Gauss-sum style,
// e.g. sqrt(2) = zeta(8) - zeta(8)^3) are not searched for; callers treat
// absence as "no representable root".
std::optional<Cyclotomic> try_nth_root(const Cyclotomic& a, unsigned long n);

} // namespace bottcher

#endif
