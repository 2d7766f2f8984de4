#ifndef FUZZPOLAR_RATIONAL_HPP
#define FUZZPOLAR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fuzzpolar {

using Integer = boost::multiprecision::cpp_int;

// Exact scalar. boost keeps it reduced with a positive denominator, which is
// exactly the canonical form the rest of the library assumes.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Parses "-3", "5/7". Denominator must be positive in the source text.
std::optional<Rational> parse_rational(const std::string& text);

// "n" or "n/d", reduced, denominator > 0. Stable across runs.
std::string format_rational(const Rational& r);

} // namespace fuzzpolar

#endif
