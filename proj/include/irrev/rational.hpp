#ifndef IRREV_RATIONAL_HPP
#define IRREV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace irrev {

// Exact scalar field for all symbolic work. cpp_rational keeps the canonical
// form by construction: denominator > 0 and gcd(|num|, den) == 1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "123", "-4", "3/4", "-3/4". Whitespace is not accepted; no floats.
std::optional<Rational> rational_from_string(std::string_view text);

} // namespace irrev

#endif
