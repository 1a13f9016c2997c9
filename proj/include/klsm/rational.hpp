#ifndef KLSM_RATIONAL_HPP
#define KLSM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace klsm {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p/q", or just "p" for integers.
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace klsm

#endif
