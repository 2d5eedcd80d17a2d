#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

/// Dense univariate polynomial in u with rational coefficients, lowest degree first.
class upoly {
public:
    upoly() = default;
    upoly(long c)
        : upoly(rational(c))
    {
    }
    upoly(const rational& c)
    {
        if (c != 0)
            m_c.push_back(c);
    }
    explicit upoly(std::vector<rational> coeffs)
        : m_c(std::move(coeffs))
    {
        trim();
    }

    /// u - root
    static upoly linear(const rational& root) { return upoly(std::vector<rational>{-root, 1}); }
    static upoly monomial(int degree, const rational& c = 1)
    {
        std::vector<rational> v(static_cast<std::size_t>(degree) + 1);
        v.back() = c;
        return upoly(std::move(v));
    }

    bool is_zero() const { return m_c.empty(); }
    int degree() const { return static_cast<int>(m_c.size()) - 1; } // -1 for zero
    const std::vector<rational>& coeffs() const { return m_c; }
    rational coeff(int k) const { return k >= 0 && k <= degree() ? m_c[static_cast<std::size_t>(k)] : rational(0); }
    const rational& lead() const
    {
        if (m_c.empty())
            throw std::domain_error("leading coefficient of zero polynomial");
        return m_c.back();
    }

    rational operator()(const rational& x) const
    {
        rational acc = 0;
        for (std::size_t k = m_c.size(); k-- > 0;)
            acc = acc * x + m_c[k];
        return acc;
    }

    upoly monic() const
    {
        if (is_zero())
            return {};
        upoly out = *this;
        const rational l = lead();
        for (auto& c : out.m_c)
            c /= l;
        return out;
    }

    upoly derivative() const
    {
        std::vector<rational> v;
        for (std::size_t k = 1; k < m_c.size(); ++k)
            v.push_back(m_c[k] * static_cast<long>(k));
        return upoly(std::move(v));
    }

    /// p(u + shift)
    upoly shifted(const rational& shift) const
    {
        upoly out;
        const upoly step = upoly(std::vector<rational>{shift, 1});
        for (std::size_t k = m_c.size(); k-- > 0;)
            out = out * step + upoly(m_c[k]);
        return out;
    }

    upoly& operator+=(const upoly& o)
    {
        if (o.m_c.size() > m_c.size())
            m_c.resize(o.m_c.size());
        for (std::size_t k = 0; k < o.m_c.size(); ++k)
            m_c[k] += o.m_c[k];
        trim();
        return *this;
    }
    upoly& operator-=(const upoly& o)
    {
        if (o.m_c.size() > m_c.size())
            m_c.resize(o.m_c.size());
        for (std::size_t k = 0; k < o.m_c.size(); ++k)
            m_c[k] -= o.m_c[k];
        trim();
        return *this;
    }
    friend upoly operator+(upoly a, const upoly& b) { return a += b; }
    friend upoly operator-(upoly a, const upoly& b) { return a -= b; }
    friend upoly operator-(upoly a)
    {
        for (auto& c : a.m_c)
            c = -c;
        return a;
    }
    friend upoly operator*(const upoly& a, const upoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<rational> v(a.m_c.size() + b.m_c.size() - 1);
        for (std::size_t i = 0; i < a.m_c.size(); ++i) {
            if (a.m_c[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.m_c.size(); ++j)
                v[i + j] += a.m_c[i] * b.m_c[j];
        }
        return upoly(std::move(v));
    }
    upoly& operator*=(const upoly& o) { return *this = *this * o; }
    friend upoly operator*(const rational& s, const upoly& p) { return upoly(s) * p; }

    friend bool operator==(const upoly&, const upoly&) = default;

    /// Quotient and remainder.
    friend std::pair<upoly, upoly> divmod(const upoly& a, const upoly& b)
    {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree())
            return {upoly(), a};
        std::vector<rational> r = a.m_c;
        std::vector<rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        const rational& l = b.lead();
        const std::size_t nb = b.m_c.size();
        for (std::size_t k = q.size(); k-- > 0;) {
            rational c = r[k + nb - 1] / l;
            if (c == 0)
                continue;
            q[k] = c;
            for (std::size_t j = 0; j < nb; ++j)
                r[k + j] -= c * b.m_c[j];
        }
        return {upoly(std::move(q)), upoly(std::move(r))};
    }

    friend upoly operator/(const upoly& a, const upoly& b)
    {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw std::domain_error("inexact polynomial division");
        return q;
    }
    friend upoly operator%(const upoly& a, const upoly& b) { return divmod(a, b).second; }

    /// Coefficients from lowest degree, e.g. "[0, 1]" for u.
    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t k = 0; k < m_c.size(); ++k)
            os << (k ? ", " : "") << m_c[k].get_str();
        os << ']';
        return os.str();
    }

private:
    void trim()
    {
        while (!m_c.empty() && m_c.back() == 0)
            m_c.pop_back();
    }

    std::vector<rational> m_c;
};

/// Monic gcd; gcd(0, 0) = 0.
inline upoly gcd(upoly a, upoly b)
{
    while (!b.is_zero()) {
        upoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Reduced ratio num/den with den monic.
class rational_fn {
public:
    rational_fn() = default;
    rational_fn(long c)
        : m_num(c)
    {
    }
    rational_fn(const rational& c)
        : m_num(c)
    {
    }
    rational_fn(upoly num, upoly den = upoly(1))
        : m_num(std::move(num))
        , m_den(std::move(den))
    {
        normalize();
    }

    const upoly& num() const { return m_num; }
    const upoly& den() const { return m_den; }
    bool is_zero() const { return m_num.is_zero(); }

    rational operator()(const rational& x) const
    {
        const rational d = m_den(x);
        if (d == 0)
            throw std::domain_error("rational function evaluated at a pole");
        return m_num(x) / d;
    }

    friend rational_fn operator+(const rational_fn& a, const rational_fn& b)
    {
        if (a.m_den == b.m_den)
            return rational_fn(a.m_num + b.m_num, a.m_den);
        return rational_fn(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend rational_fn operator-(const rational_fn& a) { return rational_fn(-a.m_num, a.m_den); }
    friend rational_fn operator-(const rational_fn& a, const rational_fn& b) { return a + (-b); }
    friend rational_fn operator*(const rational_fn& a, const rational_fn& b)
    {
        return rational_fn(a.m_num * b.m_num, a.m_den * b.m_den);
    }
    friend rational_fn operator/(const rational_fn& a, const rational_fn& b)
    {
        if (b.is_zero())
            throw std::domain_error("rational function division by zero");
        return rational_fn(a.m_num * b.m_den, a.m_den * b.m_num);
    }
    rational_fn& operator+=(const rational_fn& o) { return *this = *this + o; }
    rational_fn& operator*=(const rational_fn& o) { return *this = *this * o; }

    friend bool operator==(const rational_fn&, const rational_fn&) = default;

    /// Coefficients e_0..e_count-1 of the expansion sum_k e_k u^{-k} at infinity.
    std::vector<rational> expand_at_infinity(int count) const
    {
        const int m = m_den.degree();
        if (m_num.degree() > m)
            throw std::domain_error("rational function with a pole at infinity");
        // In w = 1/u: f = N~(w) / D~(w) with D~(w) = sum_j d_j w^{m-j}, D~(0) = 1.
        std::vector<rational> n(static_cast<std::size_t>(count)), d(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m_num.degree(); ++j)
            if (m - j < count)
                n[static_cast<std::size_t>(m - j)] = m_num.coeff(j);
        for (int j = 0; j <= m; ++j)
            d[static_cast<std::size_t>(m - j)] = m_den.coeff(j);
        std::vector<rational> e(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            rational acc = n[static_cast<std::size_t>(k)];
            for (int l = 1; l <= std::min(k, m); ++l)
                acc -= d[static_cast<std::size_t>(l)] * e[static_cast<std::size_t>(k - l)];
            e[static_cast<std::size_t>(k)] = acc;
        }
        return e;
    }

    /// Order of the pole at b (0 if b is not a pole).
    int pole_order(const rational& b) const
    {
        int order = 0;
        upoly d = m_den;
        const upoly lin = upoly::linear(b);
        while (d.degree() > 0 && d(b) == 0) {
            d = d / lin;
            ++order;
        }
        return order;
    }

    /// lim_{u->b} (u-b)^order f(u).
    rational leading_laurent_coeff(const rational& b, int order) const
    {
        upoly d = m_den;
        const upoly lin = upoly::linear(b);
        for (int k = 0; k < order; ++k) {
            auto [q, r] = divmod(d, lin);
            if (!r.is_zero())
                return 0; // pole of lower order
            d = std::move(q);
        }
        const rational dv = d(b);
        if (dv == 0)
            throw std::domain_error("leading_laurent_coeff: order below the pole order");
        return m_num(b) / dv;
    }

    /// "(num coeffs)/(den coeffs)", lowest degree first.
    std::string str() const { return "(" + m_num.str() + ")/(" + m_den.str() + ")"; }

private:
    void normalize()
    {
        if (m_den.is_zero())
            throw std::domain_error("rational function with zero denominator");
        if (m_num.is_zero()) {
            m_den = upoly(1);
            return;
        }
        if (m_den.degree() > 0) {
            const upoly g = gcd(m_num, m_den);
            if (g.degree() > 0) {
                m_num = m_num / g;
                m_den = m_den / g;
            }
        }
        const rational l = m_den.lead();
        if (l != 1) {
            m_num = upoly(rational(1) / l) * m_num;
            m_den = m_den.monic();
        }
    }

    upoly m_num;
    upoly m_den = upoly(1);
};

namespace detail {

inline integer pollard_rho(const integer& n)
{
    if (n % 2 == 0)
        return 2;
    for (unsigned long c = 1;; ++c) {
        integer x = 2, y = 2, d = 1;
        auto f = [&](const integer& v) {
            integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            integer diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

inline void factor_into(integer n, std::map<integer, int>& out)
{
    if (n < 0)
        n = -n;
    if (n <= 1)
        return;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[integer(p)];
            n /= p;
        }
    }
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    const integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

/// Prime factorization of |n| (n != 0).
inline std::map<integer, int> factorize(const integer& n)
{
    if (n == 0)
        throw std::domain_error("factorize(0)");
    std::map<integer, int> out;
    detail::factor_into(n, out);
    return out;
}

/// Positive divisors of |n|, ascending.
inline std::vector<integer> divisors(const integer& n)
{
    std::vector<integer> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t l = 0; l < base; ++l)
                out.push_back(out[l] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rational roots with multiplicity, and the cofactor with no rational roots.
struct root_split {
    std::map<rational, int> roots;
    upoly rest;
};

inline root_split split_rational_roots(const upoly& p)
{
    if (p.is_zero())
        throw std::domain_error("roots of the zero polynomial");
    root_split out;
    upoly rest = p.monic();

    // Simple roots of the square-free part, then multiplicities on the original.
    upoly sqfree = rest;
    if (rest.degree() > 0) {
        const upoly g = gcd(rest, rest.derivative());
        sqfree = rest / g;
    }
    std::vector<rational> simple;
    while (sqfree.degree() > 0) {
        if (sqfree.coeff(0) == 0) {
            simple.push_back(0);
            sqfree = sqfree / upoly::monomial(1);
            continue;
        }
        // Clear denominators to a primitive integer polynomial.
        integer l = 1;
        for (const auto& c : sqfree.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<integer> z;
        for (const auto& c : sqfree.coeffs()) {
            const rational scaled = c * l;
            z.push_back(scaled.get_num());
        }
        integer g = 0;
        for (const auto& c : z)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        for (auto& c : z)
            c /= g;

        bool found = false;
        const std::vector<integer> nums = divisors(z.front());
        const std::vector<integer> dens = divisors(z.back());
        for (const auto& q : dens) {
            for (const auto& pnum : nums) {
                for (int sign : {1, -1}) {
                    const rational cand = make_rational(integer(pnum * sign), q);
                    if (sqfree(cand) == 0) {
                        simple.push_back(cand);
                        sqfree = sqfree / upoly::linear(cand);
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        if (!found)
            break;
    }

    for (const auto& r : simple) {
        const upoly lin = upoly::linear(r);
        int m = 0;
        while (rest.degree() > 0 && rest(r) == 0) {
            rest = rest / lin;
            ++m;
        }
        out.roots[r] = m;
    }
    out.rest = rest;
    return out;
}

/// Rational roots with multiplicity; throws irrational_pole if any root is not rational.
inline std::map<rational, int> rational_roots(const upoly& p)
{
    root_split s = split_rational_roots(p);
    if (s.rest.degree() > 0)
        throw irrational_pole("polynomial factor without rational roots: " + s.rest.str());
    return s.roots;
}

/// Monic polynomial with the given roots.
inline upoly from_roots(const std::map<rational, int>& roots)
{
    upoly out(1);
    for (const auto& [r, m] : roots)
        for (int k = 0; k < m; ++k)
            out *= upoly::linear(r);
    return out;
}

} // namespace yangian
