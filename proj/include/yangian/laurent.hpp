#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace yangian {

/// Laurent polynomial in q with exact rational coefficients.
///
/// The support map never stores a zero coefficient, so two polynomials are
/// equal iff their maps are equal.
class laurent_poly {
public:
    using map_type = std::map<int, rational>;

    laurent_poly() = default;
    laurent_poly(long c) { set(0, rational(c)); }
    laurent_poly(const rational& c) { set(0, c); }

    static laurent_poly monomial(int exponent, const rational& c = 1)
    {
        laurent_poly p;
        p.set(exponent, c);
        return p;
    }

    const map_type& terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    int min_exponent() const { return require_nonzero().begin()->first; }
    int max_exponent() const { return require_nonzero().rbegin()->first; }

    rational coeff(int exponent) const
    {
        auto it = m_terms.find(exponent);
        return it == m_terms.end() ? rational(0) : it->second;
    }

    void set(int exponent, const rational& c)
    {
        if (c == 0)
            m_terms.erase(exponent);
        else
            m_terms[exponent] = c;
    }

    void add_to(int exponent, const rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = m_terms.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                m_terms.erase(it);
        }
    }

    bool is_integral() const
    {
        for (const auto& [e, c] : m_terms)
            if (!is_integer(c))
                return false;
        return true;
    }

    bool has_nonnegative_coefficients() const
    {
        for (const auto& [e, c] : m_terms)
            if (c < 0)
                return false;
        return true;
    }

    /// p(q^{-1}).
    laurent_poly bar() const
    {
        laurent_poly out;
        for (const auto& [e, c] : m_terms)
            out.m_terms.emplace(-e, c);
        return out;
    }

    /// q^k * p(q).
    laurent_poly shifted(int k) const
    {
        laurent_poly out;
        for (const auto& [e, c] : m_terms)
            out.m_terms.emplace(e + k, c);
        return out;
    }

    rational evaluate(const rational& q) const
    {
        if (q == 0 && !is_zero() && min_exponent() < 0)
            throw std::domain_error("Laurent polynomial with negative exponents evaluated at q = 0");
        rational out = 0;
        for (const auto& [e, c] : m_terms) {
            rational term = c;
            if (e >= 0)
                term *= pow(q, static_cast<unsigned>(e));
            else
                term /= pow(q, static_cast<unsigned>(-e));
            out += term;
        }
        return out;
    }

    laurent_poly& operator+=(const laurent_poly& o)
    {
        for (const auto& [e, c] : o.m_terms)
            add_to(e, c);
        return *this;
    }

    laurent_poly& operator-=(const laurent_poly& o)
    {
        for (const auto& [e, c] : o.m_terms)
            add_to(e, -c);
        return *this;
    }

    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

    friend laurent_poly operator-(const laurent_poly& a)
    {
        laurent_poly out;
        for (const auto& [e, c] : a.m_terms)
            out.m_terms.emplace(e, -c);
        return out;
    }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b)
    {
        laurent_poly out;
        for (const auto& [ea, ca] : a.m_terms)
            for (const auto& [eb, cb] : b.m_terms)
                out.add_to(ea + eb, ca * cb);
        return out;
    }

    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    friend bool operator==(const laurent_poly&, const laurent_poly&) = default;

    /// Text form with ascending exponents, e.g. "1 q^-1 + 1 q^1".
    std::string str() const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : m_terms) {
            if (!first)
                os << " + ";
            os << c.get_str() << " q^" << e;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const laurent_poly& p) { return os << p.str(); }

private:
    const map_type& require_nonzero() const
    {
        if (m_terms.empty())
            throw std::domain_error("exponent range of the zero Laurent polynomial");
        return m_terms;
    }

    map_type m_terms;
};

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
inline laurent_poly qnum(int n)
{
    laurent_poly out;
    const int m = n < 0 ? -n : n;
    const int sign = n < 0 ? -1 : 1;
    for (int k = 0; k < m; ++k)
        out.add_to(m - 1 - 2 * k, sign);
    return out;
}

/// Exact quotient in Q[q, q^-1]; throws non_exact_division on a nonzero
/// remainder.
inline laurent_poly exact_div(const laurent_poly& num, const laurent_poly& den)
{
    if (den.is_zero())
        throw std::domain_error("division by the zero Laurent polynomial");
    if (num.is_zero())
        return {};

    // Strip the monomial factors (units) and long-divide the polynomial parts.
    const int num_shift = num.min_exponent();
    const int den_shift = den.min_exponent();
    std::vector<rational> a(num.max_exponent() - num_shift + 1);
    std::vector<rational> b(den.max_exponent() - den_shift + 1);
    for (const auto& [e, c] : num.terms())
        a[e - num_shift] = c;
    for (const auto& [e, c] : den.terms())
        b[e - den_shift] = c;

    if (a.size() < b.size())
        throw non_exact_division("exact_div: (" + num.str() + ") / (" + den.str() + ")");

    std::vector<rational> quotient(a.size() - b.size() + 1);
    const rational& lead = b.back();
    for (std::size_t k = quotient.size(); k-- > 0;) {
        rational c = a[k + b.size() - 1] / lead;
        quotient[k] = c;
        if (c == 0)
            continue;
        for (std::size_t l = 0; l < b.size(); ++l)
            a[k + l] -= c * b[l];
    }
    for (const auto& r : a)
        if (r != 0)
            throw non_exact_division("exact_div: (" + num.str() + ") / (" + den.str() + ")");

    laurent_poly out;
    for (std::size_t k = 0; k < quotient.size(); ++k)
        out.set(static_cast<int>(k) + num_shift - den_shift, quotient[k]);
    return out;
}

/// Coefficients 0..upper of a power series with integer coefficients.
struct series_window {
    int upper = 0;
    std::vector<integer> coeffs; // coeffs[r] for r = 0..upper

    /// Coefficient of q^r; zero for r < 0. Throws past the window.
    integer at(int r) const
    {
        if (r < 0)
            return 0;
        if (r > upper)
            throw std::out_of_range("series window index " + std::to_string(r) + " beyond " +
                                    std::to_string(upper));
        return coeffs[static_cast<std::size_t>(r)];
    }

    friend bool operator==(const series_window&, const series_window&) = default;
};

/// Power-series window of num / (q^{2k} - q^{-2k}), with 2k = two_kappa, using
/// 1/(q^{2k} - q^{-2k}) = -q^{2k} * sum_{m>=0} q^{4km}.
inline series_window series_div_window(const laurent_poly& num, int two_kappa, int upper)
{
    if (upper < 0 || two_kappa <= 0)
        throw std::invalid_argument("series_div_window: bad window or kappa");
    if (!num.is_integral())
        throw std::invalid_argument("series_div_window: numerator must have integer coefficients");

    series_window out;
    out.upper = upper;
    out.coeffs.assign(static_cast<std::size_t>(upper) + 1, 0);
    const int period = 2 * two_kappa;
    std::map<int, integer> negative;
    for (const auto& [e, c] : num.terms()) {
        const integer ci = c.get_num();
        for (int exponent = e + two_kappa; exponent <= upper; exponent += period) {
            if (exponent < 0)
                negative[exponent] -= ci;
            else
                out.coeffs[static_cast<std::size_t>(exponent)] -= ci;
        }
    }
    for (const auto& [exponent, c] : negative)
        if (c != 0)
            throw not_taylor("series_div_window: coefficient of q^" + std::to_string(exponent) +
                             " is " + c.get_str());
    return out;
}

} // namespace yangian
