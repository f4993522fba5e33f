#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ihara {

// Exact arithmetic used by the counting and series code. Counts grow like
// (max_degree - 1)^m, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }

// Renders "num/den" with the denominator always explicit, e.g. "3/1".
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ihara
