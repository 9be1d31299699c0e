#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "lamcf/bigint.hpp"

namespace lamcf {

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  int sign() const { return lamcf::sign(num_); }
  bool is_integer() const { return den_ == 1; }
  Int floor() const { return floor_div(num_, den_); }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  long double to_long_double() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

 private:
  Int num_;
  Int den_;
};

}  // namespace lamcf
