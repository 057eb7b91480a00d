#ifndef N2CHAR_RATIONAL_HPP
#define N2CHAR_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "n2char/errors.hpp"

namespace n2char {

// Arbitrary precision integers and rationals. cpp_rational always keeps its
// value in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
	if (den == 0) {
		throw DomainError("zero denominator");
	}
	if (den < 0) {
		return Rational(-Integer(num), -Integer(den));
	}
	return Rational(Integer(num), Integer(den));
}

// Renders as "num/den", integers included ("3/1").
inline std::string to_string(const Rational& x)
{
	return numerator(x).str() + "/" + denominator(x).str();
}

// Human form: "3", "-1/2".
inline std::string to_pretty(const Rational& x)
{
	if (is_integer(x)) {
		return numerator(x).str();
	}
	return to_string(x);
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole)
{
	std::string_view digits = text;
	if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
		digits.remove_prefix(1);
	}
	if (digits.empty()) {
		throw ParseError("malformed rational '" + std::string(whole) + "'");
	}
	for (char ch : digits) {
		if (ch < '0' || ch > '9') {
			throw ParseError("malformed rational '" + std::string(whole) + "'");
		}
	}
	std::string owned(text.front() == '+' ? text.substr(1) : text);
	return Integer(owned);
}

} // namespace detail

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text)
{
	const auto slash = text.find('/');
	if (slash == std::string_view::npos) {
		return Rational(detail::parse_integer(text, text));
	}
	Integer num = detail::parse_integer(text.substr(0, slash), text);
	Integer den = detail::parse_integer(text.substr(slash + 1), text);
	if (den == 0) {
		throw ParseError("zero denominator in '" + std::string(text) + "'");
	}
	return Rational(num, den);
}

// Narrowing conversion for lattice bookkeeping; throws if out of range.
inline std::int64_t to_int64(const Integer& x)
{
	if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
		throw DomainError("integer out of 64-bit range: " + x.str());
	}
	return x.convert_to<std::int64_t>();
}

inline Integer floor(const Rational& x)
{
	Integer q = numerator(x) / denominator(x);
	if (numerator(x) < 0 && q * denominator(x) != numerator(x)) {
		q -= 1;
	}
	return q;
}

inline Integer ceil(const Rational& x)
{
	return -floor(-x);
}

} // namespace n2char

#endif // N2CHAR_RATIONAL_HPP
