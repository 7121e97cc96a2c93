#include "bottcher/poly.hpp"

#include "bottcher/errors.hpp"

#include <sstream>

namespace bottcher {

Poly::Poly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs))
{
    normalize();
}

Poly::Poly(std::initializer_list<Cyclotomic> coeffs) : c_(coeffs)
{
    normalize();
}

void Poly::normalize()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::t()
{
    return Poly{Cyclotomic(0), Cyclotomic(1)};
}

Poly Poly::constant(const Cyclotomic& c)
{
    return Poly{c};
}

Poly Poly::monomial(const Cyclotomic& c, int degree)
{
    if (c.is_zero())
        return Poly();
    std::vector<Cyclotomic> v(static_cast<size_t>(degree) + 1, Cyclotomic(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Cyclotomic& Poly::lead() const
{
    if (c_.empty())
        raise("ZeroSeries", "the zero polynomial has no leading coefficient");
    return c_.back();
}

Cyclotomic Poly::coeff(int i) const
{
    if (i < 0 || static_cast<size_t>(i) >= c_.size())
        return Cyclotomic(0);
    return c_[static_cast<size_t>(i)];
}

bool Poly::is_monic() const
{
    return !c_.empty() && c_.back().is_one();
}

std::optional<std::vector<Rational>> Poly::rational_coeffs() const
{
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        auto q = c.as_rational();
        if (!q)
            return std::nullopt;
        out.push_back(*q);
    }
    return out;
}

Cyclotomic Poly::eval(const Cyclotomic& x) const
{
    Cyclotomic acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<Cyclotomic> r(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
        r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b)
{
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Cyclotomic> r(a.c_.size() + b.c_.size() - 1, Cyclotomic(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Cyclotomic& s, const Poly& p)
{
    std::vector<Cyclotomic> r = p.coeffs();
    for (auto& c : r)
        c *= s;
    return Poly(std::move(r));
}

Poly operator*(const Poly& p, const Cyclotomic& s)
{
    return s * p;
}

Poly Poly::pow(unsigned e) const
{
    Poly acc = Poly::constant(Cyclotomic(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::composed_with(const Poly& q) const
{
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * q + Poly::constant(*it);
    return acc;
}

Poly Poly::iterate(int n) const
{
    if (n < 1)
        raise("InvalidDegree", "iterate count must be >= 1");
    Poly r = *this;
    for (int i = 1; i < n; ++i)
        r = composed_with(r);
    return r;
}

bool Poly::operator==(const Poly& o) const
{
    if (c_.size() != o.c_.size())
        return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

namespace {

// Renders one term "coef*t^e" given printing context; shared with the series
// formatter via print_term below.
void append_term(std::ostream& out, bool& first, const Cyclotomic& coef, int e,
                 const char* var)
{
    bool negated = false;
    Cyclotomic c = coef;
    // Pull a leading minus out of rational coefficients so "- 3*t" prints
    // instead of "+ -3*t".
    if (auto q = c.as_rational()) {
        if (*q < 0) {
            negated = true;
            c = -c;
        }
    }
    if (first) {
        if (negated)
            out << "-";
        first = false;
    } else {
        out << (negated ? " - " : " + ");
    }
    std::string cs = c.to_string();
    bool needs_parens = cs.find(' ') != std::string::npos;
    if (e == 0) {
        if (needs_parens)
            out << "(" << cs << ")";
        else
            out << cs;
        return;
    }
    if (!c.is_one()) {
        if (needs_parens)
            out << "(" << cs << ")";
        else
            out << cs;
        out << "*";
    }
    out << var;
    if (e != 1)
        out << "^" << e;
}

} // namespace

namespace detail {

void print_term(std::ostream& out, bool& first, const Cyclotomic& coef, int e,
                const char* var)
{
    append_term(out, first, coef, e, var);
}

} // namespace detail

std::string Poly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[static_cast<size_t>(i)].is_zero())
            continue;
        append_term(out, first, c_[static_cast<size_t>(i)], i, "t");
    }
    return out.str();
}

} // namespace bottcher
