#ifndef GHCSERIES_RATIONAL_HPP
#define GHCSERIES_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ghcseries/errors.hpp"

namespace ghcseries {

using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::int64_t floor_of(const Rational& q) {
  std::int64_t n = q.numerator(), d = q.denominator();
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

inline std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

/// Integer value of q; throws InternalError if q is not integral.
inline std::int64_t to_integer(const Rational& q) {
  if (!is_integer(q)) fail(ErrorKind::InternalError, "expected an integer, got a fraction");
  return q.numerator();
}

/// "p/q", or "p" when integral.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) fail(ErrorKind::InvalidInput, "empty number in '" + std::string(text) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) fail(ErrorKind::InvalidInput, "malformed number '" + std::string(text) + "'");
    std::int64_t value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        fail(ErrorKind::InvalidInput, "malformed number '" + std::string(text) + "'");
      if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, s[i] - '0', &value))
        fail(ErrorKind::InvalidInput, "number out of range '" + std::string(text) + "'");
    }
    return negative ? -value : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Comma separated list of rationals, e.g. "3/2,1/2".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace ghcseries

#endif  // GHCSERIES_RATIONAL_HPP
