#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace yangian {

using integer = mpz_class;
using rational = mpq_class;

inline rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

inline rational make_rational(const integer& num, const integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return rational(integer(text));
        return make_rational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const rational& r)
{
    return r.get_str();
}

inline bool is_integer(const rational& r)
{
    return r.get_den() == 1;
}

inline long to_long(const integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

inline rational pow(const rational& base, unsigned exponent)
{
    rational out = 1;
    for (unsigned k = 0; k < exponent; ++k)
        out *= base;
    return out;
}

} // namespace yangian
