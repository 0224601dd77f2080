#ifndef GFP_RATIONAL_HPP
#define GFP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gfp {

// Arbitrary-precision rationals back the exact-arithmetic path (vertex
// locations, shock ledgers, frame factors). Doubles are the default path.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "p", "p/q", "-227/3", "3.5", "0.25e1". Returns nullopt on garbage.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q == 1) form; reparses to the same value.
std::string rational_to_string(const Rational& q);

// Exact conversion; every finite double is a rational.
Rational rational_from_double(double x);

}  // namespace gfp

#endif  // GFP_RATIONAL_HPP
