#ifndef BOTTCHER_LAURENT_HPP
#define BOTTCHER_LAURENT_HPP

#include "bottcher/poly.hpp"

#include <string>
#include <vector>

namespace bottcher {

/* Truncated Laurent tail c_D t^D + c_{D-1} t^{D-1} + ... with an explicit,
 * exactly-tracked trust window.
 *
 * An inexact tail asserts: the true series has no terms above top(), its
 * coefficients on [floor_exp(), top()] are exactly the stored ones, and
 * nothing is known below floor_exp(). Every operation computes the largest
 * floor both operands can guarantee, so a stored coefficient is always a
 * theorem, never a hope.
 *
 * An exact tail is a genuine Laurent polynomial: everything outside the
 * stored support is exactly zero. */
class LaurentTail {
  public:
    // Exact zero.
    LaurentTail();

    static LaurentTail from_poly(const Poly& p); // exact
    static LaurentTail monomial(const Cyclotomic& c, int e); // exact
    // Inexact tail that is known to vanish at every exponent >= floor_exp.
    static LaurentTail zero_through(int floor_exp);
    // Inexact tail with coefficients descending from `top`; the floor is
    // top - coeffs.size() + 1. Leading zeros are stripped, the floor kept.
    static LaurentTail make(int top, std::vector<Cyclotomic> coeffs_desc);
    // Exact tail with the same layout.
    static LaurentTail make_exact(int top, std::vector<Cyclotomic> coeffs_desc);

    bool exact() const noexcept { return exact_; }
    // No nonzero coefficient in the trusted range (for an exact tail: the
    // value is the zero series).
    bool is_zero_in_window() const noexcept { return c_.empty(); }

    // Exponent of the leading nonzero trusted coefficient; errors with
    // ZeroSeries when there is none. valuation() is the spec name (v_infty).
    int top() const;
    int valuation() const { return top(); }

    // Lowest trusted exponent. Meaningless for exact tails (they are trusted
    // everywhere); returns the lowest stored exponent there.
    int floor_exp() const noexcept { return floor_; }
    // Number of trusted terms top - floor + 1; only meaningful when inexact.
    int window() const;

    // Trusted coefficient at exponent e; raises UntrustedCoefficient when e
    // lies below the floor of an inexact tail.
    Cyclotomic coeff(int e) const;
    bool trusted(int e) const noexcept;

    LaurentTail operator-() const;
    friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
    friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
    friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);
    friend LaurentTail operator*(const Cyclotomic& s, const LaurentTail& t);
    LaurentTail pow(unsigned e) const;

    // Weaken knowledge: forget coefficients below new_floor (result inexact).
    LaurentTail truncated(int new_floor) const;

    // Identical knowledge and values.
    bool operator==(const LaurentTail& o) const;
    bool operator!=(const LaurentTail& o) const { return !(*this == o); }
    // Equal on every exponent both sides know.
    bool agrees_with(const LaurentTail& o) const;

    // "t - 1/2*t^-1 - 3/8*t^-3 + O(t^-63)"; the O-term names the first
    // untrusted exponent and is omitted for exact tails. Reparses bit-exactly.
    std::string to_string() const;

  private:
    bool exact_;
    int floor_; // lowest stored exponent; trust boundary when inexact
    std::vector<Cyclotomic> c_; // descending from top = floor_ + size - 1
    void normalize();
    friend LaurentTail mul_impl(const LaurentTail&, const LaurentTail&);
};

/* zeta * t^m with zeta of order coprime to d: the monomials commuting with an
 * iterate of t^d. Validated on construction. */
struct MdElement {
    RootOfUnity zeta;
    int m;
    int base_degree;

    MdElement(RootOfUnity zeta_, int m_, int base_degree_);
};

// s(zeta t^m): exponent-k term picks up zeta^k and moves to exponent k*m.
LaurentTail substitute_md(const LaurentTail& s, const MdElement& u);

// p(s(t)) with v_infty(s) >= 1; exact when s is exact, window-preserving
// otherwise (the output floor is s.floor + (deg p - 1) * s.top).
LaurentTail compose_poly(const Poly& p, const LaurentTail& s);

// 1/s for s with a trusted leading term. Window-preserving.
LaurentTail reciprocal(const LaurentTail& s);

// Functional inverse r with s(r(t)) = t for v_infty(s) = 1. An input with
// window N yields exactly N - 1 trusted output coefficients (margin 1).
// Exact inputs are supported through the `terms` overload (monomials aside,
// an exact inverse would be an infinite series).
LaurentTail reversion(const LaurentTail& s);
LaurentTail reversion(const LaurentTail& s, int terms);

int valuation(const LaurentTail& s);

} // namespace bottcher

#endif
