#pragma once

// Exact rational scalars. Backed by GMP through Boost.Multiprecision; the
// gmp_rational backend keeps every value in lowest terms with a positive
// denominator, so equality is structural.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bihom {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Thrown when a computation contradicts a proven identity (singular basis
/// matrix, deficient eigenspace, zero norm). Always a bug, never bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

/// Always "numerator/denominator", including integers ("3/1", "0/1").
inline std::string to_fraction_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Compact form: "3", "-1/2".
inline std::string to_short_string(const Rational& q)
{
    if (is_integer(q))
        return boost::multiprecision::numerator(q).str();
    return to_fraction_string(q);
}

/// Accepts "n/d" or a bare integer "n".
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(text)));
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed '" + std::string(text) + "'");
    }
}

inline std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q))
        throw std::domain_error("to_int64: " + to_fraction_string(q) + " is not an integer");
    return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

} // namespace bihom
