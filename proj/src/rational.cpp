#include "phigroup/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace phigroup {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();

  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw bad();
    std::string digits(text.substr(0, dot));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt whole = parse_int(digits);
    BigInt part{std::string(frac)};
    bool negative = text.front() == '-';
    return {whole * scale + (negative ? -part : part), scale};
  }
  return Rational(parse_int(text));
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return {den_, num_};
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace phigroup
