#include "lamcf/rational.hpp"

#include <cmath>

#include "lamcf/error.hpp"

namespace lamcf {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw Error(ErrorCode::ZeroDenominator, "rational division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Int lhs = x.num_ * y.den_;
  Int rhs = y.num_ * x.den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long double Rational::to_long_double() const {
  // Scale so the quotient keeps full long double precision for huge operands.
  const long bits_n = static_cast<long>(mpz_sizeinbase(num_.get_mpz_t(), 2));
  const long bits_d = static_cast<long>(mpz_sizeinbase(den_.get_mpz_t(), 2));
  if (bits_n < 1000 && bits_d < 1000) {
    return lamcf::to_long_double(num_) / lamcf::to_long_double(den_);
  }
  Int scaled = num_;
  long shift = 80 - (bits_n - bits_d);
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_tdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  Int q = scaled / den_;
  return std::ldexp(lamcf::to_long_double(q), static_cast<int>(-shift));
}

std::string Rational::to_string() const {
  if (den_ == 1) return lamcf::to_string(num_);
  return lamcf::to_string(num_) + "/" + lamcf::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace lamcf
