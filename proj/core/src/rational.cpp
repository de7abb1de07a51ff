#include "lfuzzy/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) { return BigInt(std::string(s)); }

void check_unit_interval(const BigRational& v, std::string_view origin) {
  if (v < 0 || v > 1) {
    throw DomainError("grade out of [0,1]: " + std::string(origin));
  }
}

}  // namespace

std::string to_fraction_string(const BigRational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal_string(const BigRational& value, unsigned digits) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // round half up at the last kept digit
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return negative ? "-" + out : out;
}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DomainError("grade with zero denominator");
  value_ = BigRational(numerator, denominator);
  check_unit_interval(value_, to_fraction_string(value_));
}

Rational::Rational(BigRational value) : value_(std::move(value)) {
  check_unit_interval(value_, to_fraction_string(value_));
}

Rational Rational::parse(std::string_view text) {
  auto malformed = [&] {
    return ParseError("malformed grade: \"" + std::string(text) + "\"");
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw malformed();
    BigInt d = parse_digits(den);
    if (d.is_zero()) throw DomainError("grade with zero denominator: \"" +
                                       std::string(text) + "\"");
    Rational r;
    r.value_ = BigRational(parse_digits(num), d);
    check_unit_interval(r.value_, text);
    return r;
  }

  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot == std::string_view::npos ? text.size() : dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) throw malformed();
  if (whole.empty() && frac.empty()) throw malformed();
  if (!whole.empty() && !all_digits(whole)) throw malformed();
  if (!frac.empty() && !all_digits(frac)) throw malformed();

  BigInt scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
  num *= scale;
  if (!frac.empty()) num += parse_digits(frac);

  Rational r;
  r.value_ = BigRational(num, scale);
  check_unit_interval(r.value_, text);
  return r;
}

const Rational& Rational::zero() {
  static const Rational r;
  return r;
}

const Rational& Rational::one() {
  static const Rational r(1, 1);
  return r;
}

const Rational& Rational::half() {
  static const Rational r(1, 2);
  return r;
}

Rational Rational::complement() const {
  Rational r;
  r.value_ = 1 - value_;
  return r;
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace lfuzzy
