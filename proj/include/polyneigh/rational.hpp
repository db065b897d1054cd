#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "polyneigh/errors.hpp"

namespace polyneigh {

// Arbitrary-precision scalars. cpp_rational keeps the canonical form we
// require everywhere: denominator > 0, gcd(|num|, den) = 1, zero stored
// as 0/1. All geometry below runs on these; no floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A coordinate vector; length is fixed by the ambient dimension of the
/// polytope that owns it.
using Point = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        raise(ErrorKind::parse_error, "rational with zero denominator");
    if (den < 0)
        return Rational(-num) / Rational(-den);
    return Rational(num) / Rational(den);
}

/// Parses "3", "-3" or "3/4" (optional leading minus on the numerator,
/// denominator a plain digit string). Anything else is rejected, including
/// decimals, whitespace and zero denominators.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        raise(ErrorKind::parse_error, "invalid rational literal: '" + std::string(text) + "'");
    };
    if (text.empty())
        return fail();
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) -> bool {
        if (from >= to)
            return false;
        for (std::size_t i = from; i < to; ++i)
            if (text[i] < '0' || text[i] > '9')
                return false;
        return true;
    };
    std::size_t slash = text.find('/', pos);
    std::string_view num_part =
        slash == std::string_view::npos ? text.substr(pos) : text.substr(pos, slash - pos);
    if (!digits(pos, pos + num_part.size()))
        return fail();
    Integer num{std::string(num_part)};
    if (negative)
        num = -num;
    if (slash == std::string_view::npos)
        return Rational(num);
    std::string_view den_part = text.substr(slash + 1);
    if (!digits(slash + 1, text.size()))
        return fail();
    Integer den{std::string(den_part)};
    if (den == 0)
        raise(ErrorKind::parse_error, "rational with zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

/// Serializes as "3" for integers and "3/4" otherwise; inverse of parse_rational.
inline std::string to_string(const Rational& value) { return value.str(); }

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer parse_integer(std::string_view text) {
    auto fail = [&]() -> Integer {
        raise(ErrorKind::parse_error, "invalid integer literal: '" + std::string(text) + "'");
    };
    if (text.empty())
        return fail();
    std::size_t pos = text[0] == '-' ? 1 : 0;
    if (pos == text.size())
        return fail();
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            return fail();
    return Integer(std::string(text));
}

} // namespace polyneigh
