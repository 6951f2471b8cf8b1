#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fchrom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error categories. The CLI maps each one onto a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input or a violated precondition on user-supplied values.
struct InvalidArgument : Error {
  using Error::Error;
};
// A configured enumeration / size / time cap was exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};
// A caller-side hypothesis (e.g. "x is sparse") does not hold.
struct ContractViolation : Error {
  using Error::Error;
};
// Should be unreachable; indicates a bug.
struct InternalError : Error {
  using Error::Error;
};

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(Integer(num), Integer(den));
}

// Largest integer <= q.
inline Integer floor_of(const Rational& q) {
  Integer num = numerator_of(q);
  const Integer den = denominator_of(q);  // always positive
  Integer quot = num / den;               // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

// "num/den" when the denominator is not 1, plain integer otherwise.
inline std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {
inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InvalidArgument("malformed integer: '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw InvalidArgument("malformed integer: '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? Integer(-value) : value;
}
}  // namespace detail

// Parses "a", "a/b" (optionally signed). No decimal points: values cross the
// boundary exactly or not at all.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  const Integer num = detail::parse_integer(text.substr(0, slash));
  const Integer den = detail::parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace fchrom
