#include "bottcher/laurent.hpp"

#include "bottcher/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace bottcher {

namespace {

// Coefficient at exponent e looked up purely in the stored support, with 0
// outside. Callers are responsible for querying only exponents the trust
// analysis has already cleared.
Cyclotomic support_value(const LaurentTail& t, int e, int top, int floor,
                         const std::vector<Cyclotomic>& c)
{
    (void)t;
    if (c.empty() || e > top || e < floor)
        return Cyclotomic(0);
    return c[static_cast<size_t>(top - e)];
}

} // namespace

LaurentTail::LaurentTail() : exact_(true), floor_(0) {}

void LaurentTail::normalize()
{
    while (!c_.empty() && c_.front().is_zero())
        c_.erase(c_.begin());
    if (exact_) {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
            ++floor_;
        }
        if (c_.empty())
            floor_ = 0;
    }
}

LaurentTail LaurentTail::from_poly(const Poly& p)
{
    LaurentTail t;
    t.exact_ = true;
    t.floor_ = 0;
    t.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
    t.normalize();
    return t;
}

LaurentTail LaurentTail::monomial(const Cyclotomic& c, int e)
{
    LaurentTail t;
    t.exact_ = true;
    t.floor_ = e;
    if (!c.is_zero())
        t.c_.assign(1, c);
    t.normalize();
    return t;
}

LaurentTail LaurentTail::zero_through(int floor_exp)
{
    LaurentTail t;
    t.exact_ = false;
    t.floor_ = floor_exp;
    return t;
}

LaurentTail LaurentTail::make(int top, std::vector<Cyclotomic> coeffs_desc)
{
    if (coeffs_desc.empty())
        raise("WindowTooSmall", "a tail needs at least one retained term");
    LaurentTail t;
    t.exact_ = false;
    t.floor_ = top - static_cast<int>(coeffs_desc.size()) + 1;
    t.c_ = std::move(coeffs_desc);
    t.normalize();
    return t;
}

LaurentTail LaurentTail::make_exact(int top, std::vector<Cyclotomic> coeffs_desc)
{
    LaurentTail t;
    t.exact_ = true;
    t.floor_ = top - static_cast<int>(coeffs_desc.size()) + 1;
    t.c_ = std::move(coeffs_desc);
    t.normalize();
    return t;
}

int LaurentTail::top() const
{
    if (c_.empty())
        raise("ZeroSeries", "no nonzero coefficient in the retained window");
    return floor_ + static_cast<int>(c_.size()) - 1;
}

int LaurentTail::window() const
{
    return static_cast<int>(c_.size());
}

bool LaurentTail::trusted(int e) const noexcept
{
    return exact_ || e >= floor_;
}

Cyclotomic LaurentTail::coeff(int e) const
{
    if (!trusted(e))
        raise("UntrustedCoefficient",
              "exponent " + std::to_string(e) + " lies below the trusted floor " +
                  std::to_string(floor_));
    if (c_.empty())
        return Cyclotomic(0);
    int t = floor_ + static_cast<int>(c_.size()) - 1;
    return support_value(*this, e, t, floor_, c_);
}

LaurentTail LaurentTail::operator-() const
{
    LaurentTail r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

namespace {

struct Shape {
    bool exact;
    bool empty;
    int floor;
    int sup_top; // highest possibly-nonzero exponent of the true series
};

Shape shape_of(const LaurentTail& t)
{
    Shape s;
    s.exact = t.exact();
    s.empty = t.is_zero_in_window();
    s.floor = t.floor_exp();
    if (s.empty)
        s.sup_top = s.exact ? std::numeric_limits<int>::min() / 4 : s.floor - 1;
    else
        s.sup_top = t.top();
    return s;
}

} // namespace

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b)
{
    Shape sa = shape_of(a), sb = shape_of(b);
    if (sa.exact && sb.exact) {
        if (sa.empty)
            return b;
        if (sb.empty)
            return a;
        int top = std::max(sa.sup_top, sb.sup_top);
        int lo = std::min(sa.floor, sb.floor);
        std::vector<Cyclotomic> out(static_cast<size_t>(top - lo) + 1, Cyclotomic(0));
        for (int e = top; e >= lo; --e)
            out[static_cast<size_t>(top - e)] = a.coeff(e) + b.coeff(e);
        return LaurentTail::make_exact(top, std::move(out));
    }
    int floor = std::numeric_limits<int>::min();
    if (!sa.exact)
        floor = std::max(floor, sa.floor);
    if (!sb.exact)
        floor = std::max(floor, sb.floor);
    int top = std::max(sa.sup_top, sb.sup_top);
    if (top < floor)
        return LaurentTail::zero_through(floor);
    std::vector<Cyclotomic> out(static_cast<size_t>(top - floor) + 1, Cyclotomic(0));
    for (int e = top; e >= floor; --e)
        out[static_cast<size_t>(top - e)] = a.coeff(e) + b.coeff(e);
    return LaurentTail::make(top, std::move(out));
}

LaurentTail operator-(const LaurentTail& a, const LaurentTail& b)
{
    return a + (-b);
}

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b)
{
    Shape sa = shape_of(a), sb = shape_of(b);
    // An exact zero annihilates even unknown tails.
    if (sa.exact && sa.empty)
        return LaurentTail();
    if (sb.exact && sb.empty)
        return LaurentTail();

    if (sa.exact && sb.exact) {
        int top = sa.sup_top + sb.sup_top;
        int lo = sa.floor + sb.floor;
        std::vector<Cyclotomic> out(static_cast<size_t>(top - lo) + 1, Cyclotomic(0));
        for (int i = sa.sup_top; i >= sa.floor; --i) {
            Cyclotomic ai = a.coeff(i);
            if (ai.is_zero())
                continue;
            for (int j = sb.sup_top; j >= sb.floor; --j)
                out[static_cast<size_t>(top - (i + j))] += ai * b.coeff(j);
        }
        return LaurentTail::make_exact(top, std::move(out));
    }

    // The product coefficient at e is fully determined once every pairing
    // with an unknown coefficient of one factor meets a known zero of the
    // other; that happens exactly for e >= floor_inexact + sup_top_other.
    int floor = std::numeric_limits<int>::min();
    if (!sa.exact)
        floor = std::max(floor, sa.floor + sb.sup_top);
    if (!sb.exact)
        floor = std::max(floor, sb.floor + sa.sup_top);
    int top = sa.sup_top + sb.sup_top;
    if (sa.empty || sb.empty || top < floor)
        return LaurentTail::zero_through(std::max(floor, top + 1));

    std::vector<Cyclotomic> out(static_cast<size_t>(top - floor) + 1, Cyclotomic(0));
    for (int i = sa.sup_top; i >= sa.floor; --i) {
        Cyclotomic ai = a.coeff(i);
        if (ai.is_zero())
            continue;
        for (int j = std::min(sb.sup_top, top - i); j >= std::max(sb.floor, floor - i); --j)
            out[static_cast<size_t>(top - (i + j))] += ai * b.coeff(j);
    }
    return LaurentTail::make(top, std::move(out));
}

LaurentTail operator*(const Cyclotomic& s, const LaurentTail& t)
{
    if (s.is_zero())
        return t.exact() ? LaurentTail() : LaurentTail::zero_through(t.floor_exp());
    LaurentTail r = t;
    for (auto& c : r.c_)
        c *= s;
    return r;
}

LaurentTail LaurentTail::pow(unsigned e) const
{
    LaurentTail acc = LaurentTail::monomial(Cyclotomic(1), 0);
    LaurentTail base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

LaurentTail LaurentTail::truncated(int new_floor) const
{
    int eff = exact_ ? new_floor : std::max(new_floor, floor_);
    LaurentTail r;
    r.exact_ = false;
    r.floor_ = eff;
    if (!c_.empty()) {
        int t = floor_ + static_cast<int>(c_.size()) - 1;
        if (t >= eff) {
            r.c_.assign(c_.begin(),
                        c_.begin() + (static_cast<size_t>(t - eff) + 1 > c_.size()
                                          ? c_.size()
                                          : static_cast<size_t>(t - eff) + 1));
            // When eff < floor_ (exact source), extend with stored zeros.
            if (eff < floor_)
                r.c_.resize(static_cast<size_t>(t - eff) + 1, Cyclotomic(0));
        }
    }
    r.normalize();
    return r;
}

bool LaurentTail::operator==(const LaurentTail& o) const
{
    if (exact_ != o.exact_)
        return false;
    if (!exact_ && floor_ != o.floor_)
        return false;
    if (c_.size() != o.c_.size())
        return false;
    if (exact_ && !c_.empty() && floor_ != o.floor_)
        return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

bool LaurentTail::agrees_with(const LaurentTail& o) const
{
    Shape sa = shape_of(*this), sb = shape_of(o);
    int lo = std::numeric_limits<int>::min() / 2;
    if (!sa.exact)
        lo = std::max(lo, sa.floor);
    if (!sb.exact)
        lo = std::max(lo, sb.floor);
    if (sa.exact && sb.exact)
        return *this == o;
    int hi = std::max(sa.sup_top, sb.sup_top);
    for (int e = hi; e >= lo; --e)
        if (coeff(e) != o.coeff(e))
            return false;
    return true;
}

std::string LaurentTail::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (!c_.empty()) {
        int t = floor_ + static_cast<int>(c_.size()) - 1;
        for (int e = t; e >= floor_; --e) {
            Cyclotomic c = coeff(e);
            if (c.is_zero())
                continue;
            detail::print_term(out, first, c, e, "t");
        }
    }
    if (exact_)
        return first ? "0" : out.str();
    if (!first)
        out << " + ";
    out << "O(t^" << (floor_ - 1) << ")";
    return out.str();
}

// --- MdElement and substitution ---------------------------------------------

MdElement::MdElement(RootOfUnity zeta_, int m_, int base_degree_)
    : zeta(zeta_), m(m_), base_degree(base_degree_)
{
    if (m < 1)
        raise("InvalidMdElement", "the exponent m must be positive");
    if (base_degree < 2)
        raise("InvalidMdElement", "the base degree must be at least 2");
    if (std::gcd(zeta.order(), base_degree) != 1)
        raise("InvalidMdElement",
              "zeta has order " + std::to_string(zeta.order()) +
                  ", not coprime to d = " + std::to_string(base_degree));
}

LaurentTail substitute_md(const LaurentTail& s, const MdElement& u)
{
    const int m = u.m;
    const int n = u.zeta.order();
    std::vector<Cyclotomic> zpow(static_cast<size_t>(n));
    zpow[0] = Cyclotomic(1);
    Cyclotomic z = u.zeta.value();
    for (int i = 1; i < n; ++i)
        zpow[static_cast<size_t>(i)] = zpow[static_cast<size_t>(i - 1)] * z;
    auto zeta_to = [&](int k) {
        int r = k % n;
        if (r < 0)
            r += n;
        return zpow[static_cast<size_t>(r)];
    };

    if (s.is_zero_in_window()) {
        if (s.exact())
            return LaurentTail();
        return LaurentTail::zero_through(m * (s.floor_exp() - 1) + 1);
    }
    int t = s.top();
    int lo = s.floor_exp();
    int new_top = m * t;
    int new_floor = s.exact() ? m * lo : m * (lo - 1) + 1;
    std::vector<Cyclotomic> out(static_cast<size_t>(new_top - new_floor) + 1,
                                Cyclotomic(0));
    for (int k = t; k >= lo; --k) {
        Cyclotomic c = s.coeff(k);
        if (c.is_zero())
            continue;
        out[static_cast<size_t>(new_top - m * k)] = c * zeta_to(k);
    }
    if (s.exact())
        return LaurentTail::make_exact(new_top, std::move(out));
    return LaurentTail::make(new_top, std::move(out));
}

// --- composition, reciprocal, reversion -------------------------------------

LaurentTail compose_poly(const Poly& p, const LaurentTail& s)
{
    if (p.is_constant())
        return LaurentTail::from_poly(p);
    if (s.top() < 1)
        raise("ValuationMismatch",
              "composition requires v_infty(s) >= 1, got " + std::to_string(s.top()));
    LaurentTail acc = LaurentTail::monomial(p.lead(), 0);
    for (int i = p.degree() - 1; i >= 0; --i)
        acc = acc * s + LaurentTail::monomial(p.coeff(i), 0);
    return acc;
}

LaurentTail reciprocal(const LaurentTail& s)
{
    int T = s.top(); // ZeroSeries when nothing is trusted
    if (s.exact()) {
        if (s.window() == 1)
            return LaurentTail::monomial(s.coeff(T).inverse(), -T);
        raise("NotInvertible",
              "the reciprocal of an exact non-monomial tail is an infinite series; "
              "truncate first");
    }
    const int N = s.window();
    const Cyclotomic lead = s.coeff(T);
    std::vector<Cyclotomic> x(static_cast<size_t>(N)); // x[i] at exponent -T-i
    for (int i = 0; i < N; ++i) {
        // Coefficient matching of s * x = 1 at exponent e = -i.
        Cyclotomic sum(0);
        for (int j = 0; j < i; ++j)
            sum += s.coeff(T - (i - j)) * x[static_cast<size_t>(j)];
        Cyclotomic target = (i == 0) ? Cyclotomic(1) : Cyclotomic(0);
        x[static_cast<size_t>(i)] = (target - sum) / lead;
    }
    return LaurentTail::make(-T, std::move(x));
}

LaurentTail reversion(const LaurentTail& s)
{
    if (s.exact()) {
        if (!s.is_zero_in_window() && s.top() == 1 && s.window() == 1)
            return LaurentTail::monomial(s.coeff(1).inverse(), 1);
        raise("NotInvertible",
              "reversion of an exact non-monomial tail needs an explicit term "
              "count; use reversion(s, terms)");
    }
    if (s.is_zero_in_window() || s.top() != 1)
        raise("NotInvertible", "reversion requires v_infty(s) = 1");
    const int N = s.window();
    if (N < 2)
        raise("WindowTooSmall", "reversion needs a window of at least 2 terms");

    // r(s(t)) = t solved triangularly against precomputed powers s^k,
    // k = 1, 0, -1, ..., 3-N. Window bookkeeping rides on the tail ops; the
    // coeff() accessor would throw if a query ever left the trusted range.
    const int kmin = 3 - N;
    LaurentTail inv = reciprocal(s);
    std::vector<LaurentTail> powers; // powers[j] = s^{1-j}
    powers.push_back(s);
    powers.push_back(LaurentTail::monomial(Cyclotomic(1), 0));
    LaurentTail acc = inv;
    for (int k = -1; k >= kmin; --k) {
        powers.push_back(acc);
        acc = acc * inv;
    }
    auto power_at = [&](int k) -> const LaurentTail& {
        return powers[static_cast<size_t>(1 - k)];
    };

    std::vector<Cyclotomic> r(static_cast<size_t>(N - 1)); // r[i] at exponent 1-i
    for (int k = 1; k >= kmin; --k) {
        Cyclotomic sum(0);
        for (int kp = 1; kp > k; --kp)
            sum += r[static_cast<size_t>(1 - kp)] * power_at(kp).coeff(k);
        Cyclotomic target = (k == 1) ? Cyclotomic(1) : Cyclotomic(0);
        r[static_cast<size_t>(1 - k)] = (target - sum) / power_at(k).coeff(k);
    }
    return LaurentTail::make(1, std::move(r));
}

LaurentTail reversion(const LaurentTail& s, int terms)
{
    if (terms < 2)
        raise("WindowTooSmall", "reversion needs at least 2 output terms");
    if (s.is_zero_in_window() || s.top() != 1)
        raise("NotInvertible", "reversion requires v_infty(s) = 1");
    return reversion(s.truncated(1 - terms));
}

int valuation(const LaurentTail& s)
{
    return s.top();
}

} // namespace bottcher
