#include "bott/arith.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace bott {

namespace {

Int parse_int(std::string_view text) {
  Int value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer literal out of range: " + std::string(text));
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

Int Rational::floor() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// Cross-reduce before multiplying so intermediate values stay as small as possible.
Rational operator+(const Rational& a, const Rational& b) {
  Int g = std::gcd(a.den_, b.den_);
  Int lhs = checked_mul(a.num_, b.den_ / g);
  Int rhs = checked_mul(b.num_, a.den_ / g);
  return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = std::gcd(a.num_, b.den_);
  Int g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = checked_mul(a.num_, b.den_);
  Int rhs = checked_mul(b.num_, a.den_);
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace bott
