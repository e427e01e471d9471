#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delpezzo {

// Expression templates off: values behave like plain arithmetic types under
// auto and ?:.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(-Integer(num), -Integer(den));
  return Rational(Integer(num), Integer(den));
}

/// Renders `p/q` in lowest terms with q > 0; integers keep the `/1`.
inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Human-readable form: integers without the `/1`.
inline std::string format_rational(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : to_string(r);
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  out = Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

}  // namespace detail

/// Accepts "p", "p/q" (any sign placement on p, q != 0). Returns nullopt on
/// malformed input.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den(1);
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, num)) return std::nullopt;
  } else {
    if (!detail::parse_integer(text.substr(0, slash), num) ||
        !detail::parse_integer(text.substr(slash + 1), den) || den == 0)
      return std::nullopt;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational reciprocal(const Rational& r) {
  if (r == 0) throw std::domain_error("reciprocal of zero");
  return Rational(1) / r;
}

/// A rational or +infinity. Used for thresholds of divisors that vanish at a
/// point, where no constraint binds.
struct Threshold {
  std::optional<Rational> value;  // nullopt means +inf

  static Threshold infinite() { return {}; }
  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const Threshold&, const Threshold&) = default;
  friend bool operator<(const Threshold& a, const Threshold& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value < *b.value;
  }
};

inline std::string to_string(const Threshold& t) {
  return t.is_infinite() ? std::string("inf") : to_string(*t.value);
}

inline std::string format_threshold(const Threshold& t) {
  return t.is_infinite() ? std::string("inf") : format_rational(*t.value);
}

}  // namespace delpezzo
