#ifndef NOREGRET_RATIONAL_HPP_
#define NOREGRET_RATIONAL_HPP_

// exact arithmetic scalar used wherever results must match hand arithmetic
// digit for digit; double is used on the hot simulation paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace noregret {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rational(num, den);
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

inline double to_double(double r) { return r; }

// renders "3/4" (or "3" for integers), matching the reporting convention
inline std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

namespace detail {
// decimal digits with optional sign; accumulated manually so leading
// zeros are never read as an octal prefix
inline Rational parse_decimal_int(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = (s[i] == '-');
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("parse_rational: no digits");
  Rational v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("parse_rational: bad digit");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Rational(-v) : v;
}
}  // namespace detail

// accepts "3", "-3/4", "0.25" (decimals become exact via power-of-ten)
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num = detail::parse_decimal_int(text.substr(0, slash));
    Rational den = detail::parse_decimal_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denom");
    return num / den;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Rational den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return detail::parse_decimal_int(digits) / den;
  }
  return detail::parse_decimal_int(text);
}

// scalar adapters so templated formulas run in both numeric modes
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return to_double(r); }
  static double from_int(long long v) { return static_cast<double>(v); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static Rational from_int(long long v) { return Rational(v); }
};

}  // namespace noregret

#endif  // NOREGRET_RATIONAL_HPP_
