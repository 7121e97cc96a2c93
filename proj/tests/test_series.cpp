#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bottcher/errors.hpp"
#include "bottcher/laurent.hpp"
#include "bottcher/poly.hpp"

#include <random>

using namespace bottcher;

namespace {

Poly qpoly(std::initializer_list<long> coeffs)
{
    std::vector<Cyclotomic> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

LaurentTail random_tail(std::mt19937_64& rng, int top, int window)
{
    std::uniform_int_distribution<int> num(-3, 3);
    std::vector<Cyclotomic> c(static_cast<size_t>(window));
    for (auto& x : c)
        x = Cyclotomic(num(rng));
    if (c[0].is_zero())
        c[0] = Cyclotomic(1);
    return LaurentTail::make(top, std::move(c));
}

} // namespace

TEST_CASE("poly basics and composition")
{
    Poly t2 = qpoly({0, 0, 1});
    Poly t3 = qpoly({0, 0, 0, 1});
    CHECK(t2.composed_with(t3) == qpoly({0, 0, 0, 0, 0, 0, 1}));

    // C_2 o C_3 = C_6 = t^6 - 6t^4 + 9t^2 - 2, expanded by hand
    Poly c2 = qpoly({-2, 0, 1});
    Poly c3 = qpoly({0, -3, 0, 1});
    Poly c6 = qpoly({-2, 0, 9, 0, -6, 0, 1});
    CHECK(c2.composed_with(c3) == c6);
    CHECK(c3.composed_with(c2) == c6);

    Poly p = qpoly({1, 2, 0, 5});
    CHECK(p.composed_with(Poly::t()) == p);
    CHECK(Poly::t().composed_with(p) == p);

    CHECK(p.degree() == 3);
    CHECK(p.eval(Cyclotomic(2)) == Cyclotomic(1 + 4 + 40));
    CHECK(qpoly({}).is_zero());
    CHECK(qpoly({0}).is_zero());
    CHECK((qpoly({1, 1}) * qpoly({-1, 1})) == qpoly({-1, 0, 1}));
    CHECK(qpoly({0, 2}).iterate(3) == qpoly({0, 8}));
}

TEST_CASE("poly composition associativity on random samples")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> cdist(-3, 3);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Cyclotomic> a(3), b(4), c(3);
        for (auto* v : {&a, &b, &c})
            for (auto& x : *v)
                x = Cyclotomic(cdist(rng));
        Poly pa(std::move(a)), pb(std::move(b)), pc(std::move(c));
        CHECK(pa.composed_with(pb).composed_with(pc) ==
              pa.composed_with(pb.composed_with(pc)));
    }
}

TEST_CASE("poly printing")
{
    CHECK(qpoly({-3, 0, 0, 1}).to_string() == "t^3 - 3");
    CHECK(qpoly({0, -3, 0, 1}).to_string() == "t^3 - 3*t");
    CHECK(qpoly({}).to_string() == "0");
    Poly half = Poly{Cyclotomic(Rational(1, 2)), Cyclotomic(0), Cyclotomic(0),
                     Cyclotomic(0), Cyclotomic(0), Cyclotomic(3)};
    CHECK(half.to_string() == "3*t^5 + 1/2");
    Poly zc = Poly{Cyclotomic(0), Cyclotomic(1) + Cyclotomic::zeta(4)};
    CHECK(zc.to_string() == "(1 + zeta(4))*t");
}

TEST_CASE("tail construction and valuation")
{
    LaurentTail s = LaurentTail::from_poly(qpoly({0, 1, 0, 1})); // t^3 + t
    CHECK(s.exact());
    CHECK(s.valuation() == 3);
    CHECK(s.coeff(1) == Cyclotomic(1));
    CHECK(s.coeff(2) == Cyclotomic(0));
    CHECK(s.coeff(-5) == Cyclotomic(0)); // exact: trusted everywhere

    LaurentTail psi = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(2)});
    CHECK(psi.valuation() == 1);
    CHECK(psi.window() == 2);
    CHECK(psi.floor_exp() == 0);
    CHECK(psi.coeff(5) == Cyclotomic(0));
    CHECK_THROWS_WITH_AS(psi.coeff(-1), doctest::Contains("UntrustedCoefficient"),
                         DomainError);

    LaurentTail zero_win = LaurentTail::zero_through(-5);
    CHECK(zero_win.is_zero_in_window());
    CHECK_THROWS_WITH_AS(zero_win.valuation(), doctest::Contains("ZeroSeries"),
                         DomainError);
}

TEST_CASE("valuation is additive and composition-multiplicative")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> top(-2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentTail a = random_tail(rng, top(rng), 6);
        LaurentTail b = random_tail(rng, top(rng), 6);
        CHECK(valuation(a * b) == valuation(a) + valuation(b));
    }
    for (int trial = 0; trial < 10; ++trial) {
        LaurentTail s = random_tail(rng, 1 + trial % 2, 8);
        Poly p = qpoly({1, trial % 3, 0, 1});
        CHECK(valuation(compose_poly(p, s)) == p.degree() * valuation(s));
    }
}

TEST_CASE("window accounting for arithmetic")
{
    LaurentTail a = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(2),
                                          Cyclotomic(5)}); // window 4, floor -2
    LaurentTail b = LaurentTail::make(2, {Cyclotomic(3), Cyclotomic(1), Cyclotomic(1)});
    // floor -2 vs 0 -| sum trusted on [0, 2]
    LaurentTail sum = a + b;
    CHECK(sum.floor_exp() == 0);
    CHECK(sum.top() == 2);
    // product trusted floor: max(-2 + 2, 0 + 1) = 1
    LaurentTail prod = a * b;
    CHECK(prod.top() == 3);
    CHECK(prod.floor_exp() == 1);
    CHECK(prod.coeff(3) == Cyclotomic(3));
    CHECK(prod.coeff(2) == Cyclotomic(1));  // 1*1 + 0*3
    CHECK(prod.coeff(1) == Cyclotomic(1 + 0 + 6)); // 1*1 + 0*1 + 2*3

    // cancellation narrows the window but keeps the floor
    LaurentTail c = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(4)});
    LaurentTail d = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(1)});
    LaurentTail diff = c - d;
    CHECK(diff.top() == 0);
    CHECK(diff.floor_exp() == 0);

    LaurentTail zero = d - d;
    CHECK(zero.is_zero_in_window());
    CHECK(zero.floor_exp() == 0);

    // exact zero annihilates an unknown tail, inexact zero does not
    CHECK((LaurentTail() * a).exact());
    CHECK_FALSE((zero * a).exact());
}

TEST_CASE("substitute_md")
{
    MdElement sq(RootOfUnity(1, 0), 2, 3);
    LaurentTail s = LaurentTail::from_poly(qpoly({0, 1})) +
                    LaurentTail::monomial(Cyclotomic(1), -1); // t + 1/t exact
    LaurentTail sub = substitute_md(s, sq);
    CHECK(sub == LaurentTail::monomial(Cyclotomic(1), 2) +
                     LaurentTail::monomial(Cyclotomic(1), -2));

    MdElement rot(RootOfUnity(3, 1), 1, 2);
    LaurentTail t_only = LaurentTail::from_poly(Poly::t());
    CHECK(substitute_md(t_only, rot) ==
          LaurentTail::monomial(Cyclotomic::zeta(3), 1));

    // term-wise rule with a general coefficient
    MdElement gen(RootOfUnity(5, 2), 3, 2);
    LaurentTail mixed = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(7)});
    LaurentTail image = substitute_md(mixed, gen);
    Cyclotomic z = RootOfUnity(5, 2).value();
    CHECK(image.coeff(3) == z);
    CHECK(image.coeff(-3) == Cyclotomic(7) * z.pow(-1));
    CHECK(image.floor_exp() == 3 * (-1 - 1) + 1);

    // membership validation
    CHECK_THROWS_WITH_AS(MdElement(RootOfUnity(2, 1), 1, 2),
                         doctest::Contains("InvalidMdElement"), DomainError);
    CHECK_NOTHROW(MdElement(RootOfUnity(3, 1), 5, 2));

    // (1, m1) then (1, m2) equals (1, m1*m2)
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentTail r = random_tail(rng, 1, 7);
        MdElement u1(RootOfUnity(1, 0), 2, 3), u2(RootOfUnity(1, 0), 3, 3),
            u12(RootOfUnity(1, 0), 6, 3);
        CHECK(substitute_md(substitute_md(r, u1), u2) == substitute_md(r, u12));
    }
}

TEST_CASE("compose_poly on tails")
{
    LaurentTail s = LaurentTail::from_poly(Poly::t()) +
                    LaurentTail::monomial(Cyclotomic(1), -1); // t + 1/t
    CHECK(compose_poly(qpoly({0, 0, 1}), s) ==
          LaurentTail::make_exact(2, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(2),
                                      Cyclotomic(0), Cyclotomic(1)}));
    // C_3(t + 1/t) = t^3 + t^-3
    CHECK(compose_poly(qpoly({0, -3, 0, 1}), s) ==
          LaurentTail::monomial(Cyclotomic(1), 3) +
              LaurentTail::monomial(Cyclotomic(1), -3));
    CHECK(compose_poly(qpoly({1, 1}), LaurentTail::from_poly(Poly::t())) ==
          LaurentTail::from_poly(qpoly({1, 1})));

    // window preservation: inexact s with window N gives window N output
    LaurentTail inx = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(1),
                                            Cyclotomic(1), Cyclotomic(1)});
    LaurentTail out = compose_poly(qpoly({1, 0, 2, 1}), inx);
    CHECK(out.top() == 3);
    CHECK(out.window() == 5);
}

TEST_CASE("reciprocal")
{
    LaurentTail s = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(1),
                                          Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)});
    LaurentTail r = reciprocal(s);
    CHECK(r.top() == -1);
    CHECK(r.window() == 6);
    // s * r = 1 within the window
    LaurentTail prod = s * r;
    CHECK(prod.coeff(0) == Cyclotomic(1));
    for (int e = prod.floor_exp(); e < 0; ++e)
        CHECK(prod.coeff(e) == Cyclotomic(0));
    // 1/(t + 1/t) = t^-1 - t^-3 + t^-5 - ...
    CHECK(r.coeff(-1) == Cyclotomic(1));
    CHECK(r.coeff(-3) == Cyclotomic(-1));
    CHECK(r.coeff(-5) == Cyclotomic(1));

    CHECK(reciprocal(LaurentTail::monomial(Cyclotomic(2), 3)) ==
          LaurentTail::monomial(Cyclotomic(Rational(1, 2)), -3));
}

TEST_CASE("reversion basics")
{
    // identity
    LaurentTail t_inx = LaurentTail::from_poly(Poly::t()).truncated(-8);
    LaurentTail r = reversion(t_inx);
    CHECK(r.top() == 1);
    CHECK(r.coeff(1) == Cyclotomic(1));
    for (int e = r.floor_exp(); e <= 0; ++e)
        CHECK(r.coeff(e) == Cyclotomic(0));

    // exact monomial: zeta*t inverts to zeta^-1*t
    Cyclotomic z = Cyclotomic::zeta(5);
    CHECK(reversion(LaurentTail::monomial(z, 1)) ==
          LaurentTail::monomial(z.inverse(), 1));

    CHECK_THROWS_WITH_AS(reversion(LaurentTail::from_poly(qpoly({0, 0, 1})).truncated(-4)),
                         doctest::Contains("NotInvertible"), DomainError);
}

TEST_CASE("reversion of t + 1/t gives Catalan coefficients")
{
    // r = t - t^-1 - t^-3 - 2 t^-5 - 5 t^-7 - 14 t^-9 - ... (minus Catalans)
    LaurentTail s = LaurentTail::from_poly(Poly::t()) +
                    LaurentTail::monomial(Cyclotomic(1), -1);
    const int terms = 12;
    LaurentTail r = reversion(s, terms);
    CHECK(r.window() == terms);
    long catalan[] = {1, 1, 2, 5, 14, 42};
    for (int k = 1; k <= 5; ++k)
        CHECK(r.coeff(1 - 2 * k) == Cyclotomic(-catalan[k - 1]));
    CHECK(r.coeff(0) == Cyclotomic(0));
    CHECK(r.coeff(-2) == Cyclotomic(0));

    // composing back gives t through the documented margin
    LaurentTail back = compose_poly(qpoly({0, 1}), r); // r itself
    LaurentTail st = s.truncated(1 - terms);
    LaurentTail resid_right = [&] {
        // s(r(t)) - t: substitute r into the exact s = t + 1/t
        LaurentTail val = r + reciprocal(r);
        return val - LaurentTail::from_poly(Poly::t());
    }();
    CHECK(resid_right.is_zero_in_window());
    (void)back;
    (void)st;
}

TEST_CASE("reversion round trip on random tails")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        LaurentTail s = random_tail(rng, 1, 10);
        LaurentTail r = reversion(s);
        CHECK(r.window() == 9); // margin 1, documented

        // r(s(t)) = t: expand r at s using powers of s and 1/s. Coefficients
        // of r below its floor would feed exponents below r.floor_exp(), so
        // that is the honest trust boundary of this hand expansion.
        LaurentTail inv_s = reciprocal(s);
        LaurentTail acc = LaurentTail::zero_through(r.floor_exp());
        LaurentTail p = s;
        acc = acc + r.coeff(1) * s;
        LaurentTail q = LaurentTail::monomial(Cyclotomic(1), 0);
        acc = acc + r.coeff(0) * q;
        LaurentTail ip = inv_s;
        for (int k = -1; k >= r.floor_exp(); --k) {
            acc = acc + r.coeff(k) * ip;
            ip = ip * inv_s;
        }
        LaurentTail resid = acc - LaurentTail::from_poly(Poly::t());
        CHECK(resid.is_zero_in_window());
    }
}

TEST_CASE("tail printing")
{
    LaurentTail s = LaurentTail::make(
        1, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(Rational(-1, 2)), Cyclotomic(0),
            Cyclotomic(Rational(-3, 8))});
    CHECK(s.to_string() == "t - 1/2*t^-1 - 3/8*t^-3 + O(t^-4)");
    CHECK(LaurentTail::zero_through(-5).to_string() == "O(t^-6)");
    CHECK(LaurentTail().to_string() == "0");
    LaurentTail exact = LaurentTail::monomial(Cyclotomic(1), 3) +
                        LaurentTail::monomial(Cyclotomic(1), -3);
    CHECK(exact.to_string() == "t^3 + t^-3");
}

TEST_CASE("agrees_with and truncation")
{
    LaurentTail full = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(3),
                                             Cyclotomic(4)});
    LaurentTail part = full.truncated(-1);
    CHECK(part.window() == 3);
    CHECK(part.agrees_with(full));
    CHECK(full.agrees_with(part));
    LaurentTail other = LaurentTail::make(1, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(9)});
    CHECK_FALSE(other.agrees_with(full));
    CHECK(LaurentTail::zero_through(2).agrees_with(LaurentTail()));
}
