#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lfuzzy {

/// Unbounded exact rational. Used for cardinalities and other sums that may
/// leave the unit interval.
using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Lowest-terms "p/q" (or "p" when q == 1).
std::string to_fraction_string(const BigRational& value);

/// Decimal rendering rounded half-up to `digits` fractional digits.
/// Exact when the value has a terminating expansion that short.
std::string to_decimal_string(const BigRational& value, unsigned digits = 6);

/// Membership grade: an exact rational confined to [0,1].
///
/// Stored in lowest terms. Arithmetic is exact, so complement() is an
/// involution and grades equal to 1/2 compare reliably.
class Rational {
 public:
  Rational() = default;  // zero

  Rational(long long numerator, long long denominator);
  explicit Rational(BigRational value);

  /// Accepts "0.25", ".5", "1", or "3/4". Whitespace is not trimmed.
  /// Throws ParseError on malformed text, DomainError outside [0,1].
  static Rational parse(std::string_view text);

  static const Rational& zero();
  static const Rational& one();
  static const Rational& half();

  const BigRational& value() const noexcept { return value_; }

  Rational complement() const;  // 1 - x

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }

  std::string str() const { return to_fraction_string(value_); }
  std::string decimal_str(unsigned digits = 6) const {
    return to_decimal_string(value_, digits);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigRational value_;  // invariant: 0 <= value_ <= 1
};

const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace lfuzzy
