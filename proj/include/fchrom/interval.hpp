#pragma once

// Closed intervals with exact rational endpoints.
//
// Transcendental values (ln, exp, e) are enclosed by truncated series plus a
// rigorous remainder bound, then rounded outward onto a dyadic grid of
// 2^-kIntervalBits. Every operation returns an interval that contains the true
// real value, so comparisons made against the appropriate endpoint never
// misreport a true inequality as violated.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "fchrom/rational.hpp"

namespace fchrom {

inline constexpr unsigned kIntervalBits = 160;

class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw InvalidArgument("interval with hi < lo");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  Rational width() const { return hi_ - lo_; }

  // Rounds lo down and hi up onto the grid k / 2^bits.
  Interval rounded_outward(unsigned bits = kIntervalBits) const {
    if (is_point() && denominator_of(lo_) == 1) return *this;
    const Integer scale = Integer(1) << bits;
    const Rational s(scale);
    return Interval(Rational(floor_of(lo_ * s), scale), Rational(ceil_of(hi_ * s), scale));
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0 && b.hi_ >= 0) throw InvalidArgument("interval division by an interval containing 0");
    const Interval inv(1 / b.hi_, 1 / b.lo_);
    return a * inv;
  }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b); }
inline Interval operator+(const Rational& a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b); }
inline Interval operator-(const Rational& a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Rational& a, const Interval& b) { return Interval(a) * b; }
inline Interval operator*(const Interval& a, const Rational& b) { return a * Interval(b); }
inline Interval operator/(const Interval& a, const Rational& b) { return a / Interval(b); }
inline Interval operator/(const Rational& a, const Interval& b) { return Interval(a) / b; }

namespace detail {

// atanh(z) for 0 <= z <= 1/2, enclosed to within 2^-(bits+8).
inline Interval atanh_small(const Rational& z, unsigned bits) {
  if (z < 0 || z > Rational(1, 2)) throw InternalError("atanh_small argument out of range");
  if (z == 0) return Interval(Rational(0));
  const Rational z2 = z * z;
  const Rational tolerance(Integer(1), Integer(1) << (bits + 8));
  Rational sum = 0;
  Rational power = z;  // z^(2j+1)
  for (unsigned j = 0;; ++j) {
    sum += power / (2 * j + 1);
    power *= z2;
    // Tail sum_{i>j} z^(2i+1)/(2i+1) <= z^(2j+3) / ((2j+3)(1 - z^2)).
    const Rational tail = power / ((2 * j + 3) * (1 - z2));
    if (tail < tolerance) return Interval(sum, sum + tail).rounded_outward(bits + 4);
  }
}

inline const Interval& ln2_enclosure() {
  static const Interval value = (Rational(2) * atanh_small(Rational(1, 3), kIntervalBits + 8)).rounded_outward();
  return value;
}

// Largest r >= 0 with r^k <= m.
inline Integer integer_root_floor(const Integer& m, unsigned k) {
  if (m < 0) throw InvalidArgument("integer root of a negative number");
  if (m < 2 || k == 1) return m;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(m)) + 1;
  Integer lo = 0;
  Integer hi = Integer(1) << (bits / k + 1);
  while (lo < hi) {
    const Integer mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= m) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

}  // namespace detail

// Natural logarithm of a positive rational.
inline Interval ln(const Rational& q, unsigned bits = kIntervalBits) {
  if (q <= 0) throw InvalidArgument("ln of a non-positive value");
  if (q == 1) return Interval(Rational(0));
  // q = 2^k * r with r in [3/4, 3/2), so |(r-1)/(r+1)| <= 1/5.
  long k = 0;
  Rational r = q;
  while (r >= Rational(3, 2)) { r /= 2; ++k; }
  while (r < Rational(3, 4)) { r *= 2; --k; }
  const Rational z = (r - 1) / (r + 1);
  Interval ln_r = z >= 0 ? Rational(2) * detail::atanh_small(z, bits + 8)
                         : -(Rational(2) * detail::atanh_small(-z, bits + 8));
  return (Rational(k) * detail::ln2_enclosure() + ln_r).rounded_outward(bits);
}

// exp of a rational argument.
inline Interval exp(const Rational& x, unsigned bits = kIntervalBits) {
  if (x == 0) return Interval(Rational(1));
  // exp(x) = exp(x / 2^h)^(2^h) with |x / 2^h| <= 1/2.
  unsigned halvings = 0;
  Rational y = x;
  while (boost::multiprecision::abs(y) > Rational(1, 2)) { y /= 2; ++halvings; }
  const unsigned inner_bits = bits + 16 + 2 * halvings;
  const Rational tolerance(Integer(1), Integer(1) << inner_bits);
  Rational sum = 1;
  Rational term = 1;
  Interval result;
  for (unsigned j = 1;; ++j) {
    term = term * y / j;
    sum += term;
    // |tail| <= 2 |y|^(j+1) / (j+1)! for |y| <= 1/2.
    const Rational tail = 2 * boost::multiprecision::abs(term * y) / (j + 1);
    if (tail < tolerance) {
      result = Interval(sum - tail, sum + tail).rounded_outward(inner_bits);
      break;
    }
  }
  for (unsigned i = 0; i < halvings; ++i) result = (result * result).rounded_outward(inner_bits);
  return result.rounded_outward(bits);
}

inline const Interval& euler_e() {
  static const Interval value = fchrom::exp(Rational(1));
  return value;
}

// log_base(q) = ln q / ln base; requires base > 1 or 0 < base < 1.
inline Interval log_base(const Rational& q, const Rational& base, unsigned bits = kIntervalBits) {
  if (base <= 0 || base == 1) throw InvalidArgument("logarithm base must be positive and != 1");
  return (ln(q, bits + 16) / ln(base, bits + 16)).rounded_outward(bits);
}

// log_base(e * s) = (1 + ln s) / ln base, without enclosing e itself.
inline Interval log_base_of_e_times(const Rational& s, const Rational& base, unsigned bits = kIntervalBits) {
  if (base <= 1) throw InvalidArgument("logarithm base must exceed 1");
  return ((Rational(1) + ln(s, bits + 16)) / ln(base, bits + 16)).rounded_outward(bits);
}

// If q^(1/k) is rational, returns it.
inline std::optional<Rational> exact_root(const Rational& q, unsigned k) {
  if (q < 0) return std::nullopt;
  const Integer num = numerator_of(q), den = denominator_of(q);
  const Integer rn = detail::integer_root_floor(num, k), rd = detail::integer_root_floor(den, k);
  if (boost::multiprecision::pow(rn, k) == num && boost::multiprecision::pow(rd, k) == den) return Rational(rn, rd);
  return std::nullopt;
}

// base^exponent for rational base > 0 and rational exponent. Exact (a point
// interval) whenever the result is rational and the exponent's parts are small.
inline Interval pow(const Rational& base, const Rational& exponent, unsigned bits = kIntervalBits) {
  if (base <= 0) throw InvalidArgument("pow requires a positive base");
  const Integer a = numerator_of(exponent), b = denominator_of(exponent);
  if (boost::multiprecision::abs(a) <= 256 && b <= 256) {
    const unsigned ua = static_cast<unsigned>(boost::multiprecision::abs(a));
    Rational power = Rational(boost::multiprecision::pow(numerator_of(base), ua),
                              boost::multiprecision::pow(denominator_of(base), ua));
    if (a < 0) power = 1 / power;
    if (auto root = exact_root(power, static_cast<unsigned>(b))) return Interval(*root);
  }
  // exp is monotone, so exp([lo, hi]) = [exp(lo), exp(hi)].
  const Interval arg = (exponent * ln(base, bits + 32)).rounded_outward(bits + 32);
  return Interval(fchrom::exp(arg.lo(), bits + 8).lo(), fchrom::exp(arg.hi(), bits + 8).hi()).rounded_outward(bits);
}

// Decimal rendering of an interval, for human-readable output only.
inline std::string to_display(const Interval& iv) {
  if (iv.is_point()) return to_string(iv.lo());
  return "[" + std::to_string(to_double(iv.lo())) + ", " + std::to_string(to_double(iv.hi())) + "]";
}

}  // namespace fchrom
