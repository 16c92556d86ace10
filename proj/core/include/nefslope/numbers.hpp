#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nefslope {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed textual numbers and other input defects.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_integer(std::string_view text);

/// Accepts "p", "p/q", decimal "0.125" and scientific "1e-12" forms, exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// True when divisor divides value; every integer divides 0.
bool divides(const Integer& divisor, const Integer& value);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

double to_double(const Rational& r);

}  // namespace nefslope
