#include "curvex/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "curvex/errors.hpp"

namespace curvex {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

__extension__ using Wide = __int128;

[[noreturn]] void overflow(const char* op) {
  throw OverflowError(std::string("64-bit overflow in rational ") + op);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == kMin || b == kMin) overflow("gcd");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == kMin) overflow("construction");
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (numerator == kMin || denominator == kMin) overflow("construction");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  std::int64_t g = gcd(den_, rhs.den_);
  std::int64_t lhs_scale = rhs.den_ / g;
  std::int64_t rhs_scale = den_ / g;
  std::int64_t n = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
  std::int64_t d = checked_mul(den_, lhs_scale);
  return *this = Rational(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // cross-cancel first so intermediate products stay small
  std::int64_t g1 = gcd(num_, rhs.den_);
  std::int64_t g2 = gcd(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  std::int64_t n = checked_mul(num_ / g1, rhs.num_ / g2);
  std::int64_t d = checked_mul(den_ / g2, rhs.den_ / g1);
  return *this = Rational(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  // 64x64 products always fit in 128 bits.
  Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
  Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return fraction();
}

std::string Rational::fraction() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace curvex
