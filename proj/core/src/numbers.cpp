#include "nefslope/numbers.hpp"

#include <cctype>

namespace nefslope {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix
Integer decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer(std::string(digits.substr(first)));
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw InputError("malformed integer '" + std::string(text) + "'");
  Integer value = decimal(body);
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw InputError("malformed rational '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string exp_text(text.substr(e + 1));
    try {
      std::size_t used = 0;
      exponent = std::stoll(exp_text, &used);
      if (used != exp_text.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("malformed exponent in '" + std::string(text) + "'");
    }
    if (exponent > 10000 || exponent < -10000) throw InputError("exponent out of range in '" + std::string(text) + "'");
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw InputError("malformed number '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    frac_digits = static_cast<long long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw InputError("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }

  Rational value{decimal(digits)};
  long long shift = exponent - frac_digits;
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  value = shift < 0 ? Rational(value / ten_pow) : Rational(value * ten_pow);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator_of(value) == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

bool divides(const Integer& divisor, const Integer& value) {
  if (value == 0) return true;
  if (divisor == 0) return false;
  return value % divisor == 0;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace nefslope
