#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "liecoh/errors.hpp"

namespace liecoh {

/// Exact arbitrary-precision arithmetic. Every quantity in the library is a
/// Rational; nothing is ever rounded. The backend keeps values in lowest
/// terms with a positive denominator. Expression templates are off so that
/// arithmetic yields plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses an unsigned decimal integer starting at `i`; advances `i`.
inline Integer parse_unsigned(std::string_view s, std::size_t& i) {
    if (i >= s.size() || !is_digit(s[i])) throw ParseError(i, "expected a digit");
    Integer v = 0;
    while (i < s.size() && is_digit(s[i])) {
        v = v * 10 + (s[i] - '0');
        ++i;
    }
    return v;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.5" (always exactly
/// representable: d.f == (d*10^k + f) / 10^k). Advances `i` past the literal.
inline Rational parse_rational(std::string_view s, std::size_t& i) {
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    Integer whole = detail::parse_unsigned(s, i);
    Rational value(whole);
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t at = i;
        Integer den = detail::parse_unsigned(s, i);
        if (den == 0) throw ParseError(at, "zero denominator");
        value = Rational(whole, den);
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::size_t at = i;
        Integer frac = 0, scale = 1;
        if (i >= s.size() || !detail::is_digit(s[i])) throw ParseError(at, "expected digits after decimal point");
        while (i < s.size() && detail::is_digit(s[i])) {
            frac = frac * 10 + (s[i] - '0');
            scale *= 10;
            ++i;
        }
        value = Rational(whole * scale + frac, scale);
    }
    return neg ? Rational(-value) : value;
}

/// Parses a complete rational literal; rejects trailing garbage.
inline Rational parse_rational(std::string_view s) {
    std::size_t i = 0;
    Rational v = parse_rational(s, i);
    if (i != s.size()) throw ParseError(i, "unexpected trailing characters in rational literal");
    return v;
}

}  // namespace liecoh
