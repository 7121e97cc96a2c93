#include "bottcher/cyclotomic.hpp"

#include "bottcher/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bottcher {

namespace {

std::atomic<int> g_conductor_cap{120};

// --- dense univariate polynomials over Q, ascending coefficients ----------
// Local helpers for the quotient-ring arithmetic; the public Poly type lives
// in the series module and depends on Cyclotomic, so it cannot be used here.

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

// Remainder of a modulo monic m.
QPoly qmod(QPoly a, const QPoly& m)
{
    qtrim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t j = 0; j < dm; ++j)
                a[shift + j] -= lead * m[j];
        }
        a.pop_back();
        qtrim(a);
        if (a.size() <= dm)
            break;
    }
    return a;
}

// Exact quotient a / b (remainder known to vanish); b need not be monic.
QPoly qdiv_exact(QPoly a, const QPoly& b)
{
    qtrim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        qtrim(a);
    }
    return q;
}

// Extended gcd: returns (g, u) with u*a = g mod m, g = gcd(a, m) monic.
std::pair<QPoly, QPoly> qinv_mod(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = qmod(a, m);
    QPoly u0 = {}, u1 = {Rational(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        QPoly r2 = r0;
        QPoly q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 0, Rational(0));
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j)
                r2[shift + j] -= c * r1[j];
            qtrim(r2);
        }
        QPoly u2 = u0;
        {
            QPoly qu1 = qmul(q, u1);
            if (u2.size() < qu1.size())
                u2.resize(qu1.size(), Rational(0));
            for (size_t i = 0; i < qu1.size(); ++i)
                u2[i] -= qu1[i];
            qtrim(u2);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // normalize gcd monic
    if (!r0.empty() && r0.back() != 1) {
        Rational lead = r0.back();
        for (auto& c : r0)
            c /= lead;
        for (auto& c : u0)
            c /= lead;
    }
    return {r0, u0};
}

std::vector<int> divisors_of(int n)
{
    std::vector<int> d;
    for (int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i)
                d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::map<int, QPoly>& phi_cache()
{
    static std::map<int, QPoly> cache;
    return cache;
}

std::mutex& phi_mutex()
{
    static std::mutex m;
    return m;
}

const QPoly& phi_poly(int n)
{
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // Phi_n = (x^n - 1) / prod_{e | n, e < n} Phi_e, computed bottom-up so the
    // recursion never re-enters the lock.
    std::vector<int> divs = divisors_of(n);
    for (int e : divs) {
        if (cache.count(e))
            continue;
        QPoly num(static_cast<size_t>(e) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<size_t>(e)] = 1;
        for (int d2 : divisors_of(e)) {
            if (d2 == e)
                continue;
            num = qdiv_exact(std::move(num), cache.at(d2));
        }
        cache.emplace(e, std::move(num));
    }
    return cache.at(n);
}

int checked_lcm(int a, int b)
{
    long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
    if (l > g_conductor_cap.load())
        raise("ConductorCapExceeded",
              "conductor " + std::to_string(l) + " exceeds the cap of " +
                  std::to_string(g_conductor_cap.load()));
    return static_cast<int>(l);
}

} // namespace

int conductor_cap() noexcept
{
    return g_conductor_cap.load();
}

void set_conductor_cap(int cap)
{
    if (cap < 1)
        raise("ConductorCapExceeded", "conductor cap must be positive");
    g_conductor_cap.store(cap);
}

int euler_phi(int n)
{
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int n)
{
    if (n < 1)
        raise("ConductorCapExceeded", "conductor must be positive");
    if (n > g_conductor_cap.load())
        raise("ConductorCapExceeded",
              "conductor " + std::to_string(n) + " exceeds the cap of " +
                  std::to_string(g_conductor_cap.load()));
    return phi_poly(n);
}

// --- RootOfUnity -----------------------------------------------------------

RootOfUnity::RootOfUnity(long order, long exponent)
{
    if (order < 1)
        raise("InvalidTwist", "root of unity order must be positive");
    long k = exponent % order;
    if (k < 0)
        k += order;
    if (k == 0) {
        order_ = 1;
        exp_ = 0;
        return;
    }
    long g = std::gcd(k, order);
    order_ = static_cast<int>(order / g);
    exp_ = static_cast<int>(k / g);
}

Cyclotomic RootOfUnity::value() const
{
    return Cyclotomic::zeta(order_).pow(exp_);
}

RootOfUnity RootOfUnity::times(const RootOfUnity& other) const
{
    long l = std::lcm(static_cast<long>(order_), static_cast<long>(other.order_));
    long k = static_cast<long>(exp_) * (l / order_) +
             static_cast<long>(other.exp_) * (l / other.order_);
    return RootOfUnity(l, k);
}

std::string RootOfUnity::to_string() const
{
    if (order_ == 1)
        return "1";
    if (order_ == 2)
        return "-1";
    std::string s = "zeta(" + std::to_string(order_) + ")";
    if (exp_ != 1)
        s += "^" + std::to_string(exp_);
    return s;
}

// --- Cyclotomic ------------------------------------------------------------

Cyclotomic Cyclotomic::zeta(int n)
{
    cyclotomic_polynomial(n); // cap check
    if (n == 1)
        return Cyclotomic(1);
    std::vector<Rational> coords(static_cast<size_t>(2), Rational(0));
    coords[1] = 1;
    return from_coords(n, std::move(coords));
}

Cyclotomic Cyclotomic::from_coords(int conductor, std::vector<Rational> coords)
{
    const QPoly& phi = cyclotomic_polynomial(conductor);
    const size_t deg = phi.size() - 1; // = euler_phi(conductor)
    for (auto& c : coords)
        c.canonicalize(); // raw (p, q) pairs may arrive unreduced
    QPoly reduced = qmod(std::move(coords), phi);
    reduced.resize(deg == 0 ? 1 : deg, Rational(0));
    Cyclotomic c;
    c.conductor_ = conductor;
    c.coords_ = std::move(reduced);
    return c;
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_one() const
{
    if (coords_[0] != 1)
        return false;
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& q) { return q == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const
{
    if (!is_rational())
        return std::nullopt;
    return coords_[0];
}

Cyclotomic Cyclotomic::embedded(int m) const
{
    if (m == conductor_)
        return *this;
    if (m % conductor_ != 0)
        raise("ConductorCapExceeded",
              "cannot embed conductor " + std::to_string(conductor_) +
                  " into non-multiple " + std::to_string(m));
    const int k = m / conductor_;
    QPoly lifted(static_cast<size_t>(conductor_ - 1) * k + 1, Rational(0));
    for (size_t i = 0; i < coords_.size(); ++i)
        lifted[i * static_cast<size_t>(k)] = coords_[i];
    return from_coords(m, std::move(lifted));
}

std::optional<Cyclotomic> Cyclotomic::descended(int n) const
{
    if (conductor_ % n != 0)
        return std::nullopt;
    if (n == conductor_)
        return *this;
    const int phi_n = euler_phi(n);
    const int phi_m = static_cast<int>(coords_.size());

    // Columns: embeddings of the power basis of Q(zeta_n); solve T x = coords.
    std::vector<std::vector<Rational>> cols;
    cols.reserve(static_cast<size_t>(phi_n));
    for (int i = 0; i < phi_n; ++i) {
        QPoly basis(static_cast<size_t>(i) + 1, Rational(0));
        basis[static_cast<size_t>(i)] = 1;
        Cyclotomic b = from_coords(n, std::move(basis)).embedded(conductor_);
        cols.push_back(b.coords());
    }

    // Gaussian elimination on the phi_m x (phi_n + 1) augmented system.
    std::vector<std::vector<Rational>> aug(
        static_cast<size_t>(phi_m), std::vector<Rational>(static_cast<size_t>(phi_n) + 1, Rational(0)));
    for (int r = 0; r < phi_m; ++r) {
        for (int c = 0; c < phi_n; ++c)
            aug[r][c] = cols[c][r];
        aug[r][phi_n] = coords_[static_cast<size_t>(r)];
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < phi_n && rank < phi_m; ++c) {
        int pr = -1;
        for (int r = rank; r < phi_m; ++r) {
            if (aug[r][c] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0)
            continue;
        std::swap(aug[rank], aug[pr]);
        for (int r = 0; r < phi_m; ++r) {
            if (r == rank || aug[r][c] == 0)
                continue;
            Rational factor = aug[r][c] / aug[rank][c];
            for (int j = c; j <= phi_n; ++j)
                aug[r][j] -= factor * aug[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    // Consistency: rows below rank must have zero RHS.
    for (int r = rank; r < phi_m; ++r)
        if (aug[r][phi_n] != 0)
            return std::nullopt;
    std::vector<Rational> x(static_cast<size_t>(phi_n), Rational(0));
    for (int r = 0; r < rank; ++r)
        x[static_cast<size_t>(pivot_col[r])] = aug[r][phi_n] / aug[r][pivot_col[r]];
    return from_coords(n, std::move(x));
}

Cyclotomic Cyclotomic::minimized() const
{
    for (int n : divisors_of(conductor_)) {
        if (n == conductor_)
            break;
        if (auto d = descended(n))
            return *d;
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
{
    int l = checked_lcm(a.conductor_, b.conductor_);
    Cyclotomic ea = a.embedded(l), eb = b.embedded(l);
    for (size_t i = 0; i < ea.coords_.size(); ++i)
        ea.coords_[i] += eb.coords_[i];
    return ea;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b)
{
    int l = checked_lcm(a.conductor_, b.conductor_);
    Cyclotomic ea = a.embedded(l), eb = b.embedded(l);
    for (size_t i = 0; i < ea.coords_.size(); ++i)
        ea.coords_[i] -= eb.coords_[i];
    return ea;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    // Fast path: rational times anything needs no embedding.
    if (a.is_rational()) {
        Cyclotomic r = b;
        for (auto& c : r.coords_)
            c *= a.coords_[0];
        r.conductor_ = b.conductor_;
        return r;
    }
    if (b.is_rational())
        return b * a;
    int l = checked_lcm(a.conductor_, b.conductor_);
    Cyclotomic ea = a.embedded(l), eb = b.embedded(l);
    QPoly prod = qmul(ea.coords_, eb.coords_);
    return Cyclotomic::from_coords(l, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        raise("DivisionByZero", "cannot invert 0");
    if (is_rational()) {
        Cyclotomic r;
        r.conductor_ = conductor_;
        r.coords_.assign(coords_.size(), Rational(0));
        r.coords_[0] = Rational(1) / coords_[0];
        return r;
    }
    auto [g, u] = qinv_mod(coords_, cyclotomic_polynomial(conductor_));
    // Phi_n is irreducible over Q, so the gcd of a nonzero element with it is 1.
    if (g.size() != 1)
        raise("DivisionByZero", "non-invertible element (internal)");
    return from_coords(conductor_, std::move(u));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b)
{
    return a * b.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e == 0)
        return Cyclotomic(1);
    if (e < 0)
        return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc(1);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::conj() const
{
    // zeta^i -> zeta^{-i} = zeta^{n-i}
    const int n = conductor_;
    QPoly lifted(static_cast<size_t>(n), Rational(0));
    lifted[0] = coords_[0];
    for (size_t i = 1; i < coords_.size(); ++i)
        lifted[static_cast<size_t>(n) - i] = coords_[i];
    return from_coords(n, std::move(lifted));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    if (conductor_ == o.conductor_)
        return coords_ == o.coords_;
    int l = checked_lcm(conductor_, o.conductor_);
    return embedded(l).coords_ == o.embedded(l).coords_;
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const
{
    if (is_zero())
        return std::nullopt;
    if (auto q = as_rational()) {
        if (*q == 1)
            return RootOfUnity(1, 0);
        if (*q == -1)
            return RootOfUnity(2, 1);
        return std::nullopt;
    }
    // The roots of unity inside Q(zeta_n) form mu_N with N = lcm(2, n); every
    // element of mu_N is +-zeta_n^j, so matching stays inside the own field.
    const int n = conductor_;
    const long N = std::lcm(2L, static_cast<long>(n));
    if (!pow(N).is_one())
        return std::nullopt;
    Cyclotomic z = Cyclotomic::zeta(n);
    Cyclotomic p(1);
    for (int j = 0; j < n; ++j) {
        if (j > 0)
            p = p * z;
        if (p == *this)
            return RootOfUnity(n, j);
        if (-p == *this)
            return RootOfUnity(2, 1).times(RootOfUnity(n, j));
    }
    return std::nullopt;
}

std::string Cyclotomic::to_string() const
{
    if (auto q = as_rational())
        return bottcher::to_string(*q);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c == 0)
            continue;
        Rational a = c >= 0 ? c : Rational(-c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << bottcher::to_string(a);
            continue;
        }
        if (a != 1)
            out << bottcher::to_string(a) << "*";
        out << "zeta(" << conductor_ << ")";
        if (i > 1)
            out << "^" << i;
    }
    if (first)
        return "0";
    return out.str();
}

std::optional<Cyclotomic> try_nth_root(const Cyclotomic& a, unsigned long n)
{
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return a;
    if (a.is_zero())
        return Cyclotomic(0);

    // Decompose a = q * zeta_m^k with q rational, scanning the finitely many
    // power-basis monomials of the conductor.
    const int m = a.conductor();
    Rational q;
    long k_found = -1;
    Cyclotomic z = Cyclotomic::zeta(m);
    Cyclotomic p = Cyclotomic(1).embedded(m); // coords compare needs one conductor
    for (int k = 0; k < m; ++k) {
        if (k > 0)
            p = p * z;
        // Is a a rational multiple of zeta_m^k?
        const auto& pc = p.coords();
        const auto& ac = a.coords();
        size_t lead = pc.size();
        for (size_t i = 0; i < pc.size(); ++i) {
            if (pc[i] != 0) {
                lead = i;
                break;
            }
        }
        if (lead == pc.size())
            continue;
        Rational ratio = ac[lead] / pc[lead];
        bool match = true;
        for (size_t i = 0; i < pc.size(); ++i) {
            if (ac[i] != ratio * pc[i]) {
                match = false;
                break;
            }
        }
        if (match) {
            q = ratio;
            k_found = k;
            break;
        }
    }
    if (k_found < 0)
        return std::nullopt;

    // a = q * zeta_m^{k}; root the rational part and the unity part separately.
    bool negate = q < 0;
    Rational absq = negate ? Rational(-q) : q;
    auto root_abs = nth_root_rational(absq, n);
    if (!root_abs)
        return std::nullopt;
    // Unity part including the sign: (-1)^{negate} * zeta_m^k as canonical root.
    RootOfUnity w(m, k_found);
    if (negate)
        w = w.times(RootOfUnity(2, 1));
    // An n-th root of zeta_order^exp is zeta_{order*n}^{exp}.
    long root_order = static_cast<long>(w.order()) * static_cast<long>(n);
    if (root_order > conductor_cap())
        return std::nullopt;
    RootOfUnity wr(root_order, w.exponent());
    Cyclotomic result = Cyclotomic(*root_abs) * wr.value();
    // Paranoia-free check: confirm the candidate actually works.
    if (result.pow(static_cast<long>(n)) != a)
        return std::nullopt;
    return result;
}

} // namespace bottcher
