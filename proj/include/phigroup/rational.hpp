#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace phigroup {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// that arithmetic results are plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `den` is zero.
  Rational(BigInt num, BigInt den);

  /// Parses "a", "-a", "a/b" or a finite decimal such as "7.4".
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  BigInt floor() const;
  double to_double() const;

  /// "a/b" in lowest terms, or "a" when the denominator is 1.
  std::string str() const;

  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace phigroup
