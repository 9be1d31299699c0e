#include "lamcf/quad_surd.hpp"

#include <cmath>

#include "lamcf/error.hpp"

namespace lamcf {
namespace {

// Exact sign of x + y*sqrt(d) for a non-square d > 0.
int sign_of(const Int& x, const Int& y, const Int& d) {
  const int sx = sgn(x);
  const int sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  Int lhs = x * x;
  Int rhs = y * y * d;
  return lhs > rhs ? sx : sy;
}

}  // namespace

SquareFreeSplit square_free_split(const Int& n) {
  if (n < 0) throw Error(ErrorCode::NegativeInput, "square-free split of negative integer");
  SquareFreeSplit out{Int(1), Int(1)};
  if (n == 0) {
    out.square_root_part = 0;
    return out;
  }
  Int rest = n;
  // Once p^3 > rest, rest has at most two prime factors: 1, p, p*q or p^2.
  for (Int p = 2; p * p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) out.square_root_part *= p;
    if (exponent % 2 == 1) out.core *= p;
  }
  if (rest > 1 && is_square(rest)) {
    out.square_root_part *= isqrt(rest);
  } else {
    out.core *= rest;
  }
  return out;
}

QuadNumber quadratic_root(const Int& a, const Int& b, const Int& c, int root_sign) {
  if (a == 0) throw Error(ErrorCode::ZeroDenominator, "leading coefficient is zero");
  Int g = gcd(gcd(a, b), c);
  Int a1 = a / g;
  Int b1 = b / g;
  Int c1 = c / g;
  Int disc = b1 * b1 - 4 * a1 * c1;
  if (disc < 0) throw Error(ErrorCode::NegativeInput, "quadratic has no real root");
  return QuadSurd::make(-b1, root_sign, disc, 2 * a1);
}

QuadSurd::QuadSurd(Int p, Int q, Int r, Int D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), D_(std::move(D)) {
  normalize();
}

void QuadSurd::normalize() {
  if (r_ == 0) throw Error(ErrorCode::ZeroDenominator, "surd with zero denominator");
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadNumber QuadSurd::make(const Int& p, const Int& q, const Int& radicand, const Int& r) {
  if (r == 0) throw Error(ErrorCode::ZeroDenominator, "surd with zero denominator");
  if (radicand < 0) throw Error(ErrorCode::NegativeInput, "negative radicand");
  if (q == 0 || radicand == 0) return Rational(p, r);
  SquareFreeSplit split = square_free_split(radicand);
  Int q_scaled = q * split.square_root_part;
  if (split.core == 1) return Rational(p + q_scaled, r);
  return QuadSurd(p, q_scaled, r, split.core);
}

QuadSurd QuadSurd::make_irrational(const Int& p, const Int& q, const Int& radicand, const Int& r) {
  QuadNumber n = make(p, q, radicand, r);
  if (auto* s = std::get_if<QuadSurd>(&n)) return *s;
  throw Error(ErrorCode::ParseError, "value is rational: " + std::get<Rational>(n).to_string());
}

int QuadSurd::sign() const { return sign_of(p_, q_, D_); }

Int QuadSurd::floor() const {
  Int t = isqrt(q_ * q_ * D_);
  if (q_ > 0) return floor_div(p_ + t, r_);
  return floor_div(p_ - t - 1, r_);
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, r_, D_); }

QuadSurd QuadSurd::linear_fractional(const Int& a, const Int& b, const Int& c, const Int& d) const {
  if (a * d - b * c == 0) throw Error(ErrorCode::NotUnimodular, "singular linear fractional map");
  // x = (p + q*sqrt(D))/r; numerator and denominator share the 1/r factor.
  Int p1 = a * p_ + b * r_;
  Int q1 = a * q_;
  Int p2 = c * p_ + d * r_;
  Int q2 = c * q_;
  Int den = p2 * p2 - q2 * q2 * D_;
  return QuadSurd(p1 * p2 - q1 * q2 * D_, q1 * p2 - p1 * q2, den, D_);
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, r_, D_); }
QuadSurd QuadSurd::operator+(const Int& n) const { return QuadSurd(p_ + n * r_, q_, r_, D_); }
QuadSurd QuadSurd::operator-(const Int& n) const { return QuadSurd(p_ - n * r_, q_, r_, D_); }

long double QuadSurd::to_long_double() const {
  const long double root = std::sqrt(lamcf::to_long_double(D_));
  const long double qs = lamcf::to_long_double(q_) * root;
  const long double pp = lamcf::to_long_double(p_);
  const long double rr = lamcf::to_long_double(r_);
  if (sgn(p_) * sgn(q_) >= 0) return (pp + qs) / rr;
  // Opposite signs: rationalize to avoid cancellation.
  Int norm = p_ * p_ - q_ * q_ * D_;
  return lamcf::to_long_double(norm) / ((pp - qs) * rr);
}

std::string QuadSurd::to_string() const {
  std::string root = "sqrt(" + lamcf::to_string(D_) + ")";
  std::string body;
  if (q_ == 1) {
    body = root;
  } else if (q_ == -1) {
    body = "-" + root;
  } else {
    body = lamcf::to_string(q_) + "*" + root;
  }
  if (p_ != 0) {
    std::string tail = q_ < 0 ? " - " + body.substr(1) : " + " + body;
    body = lamcf::to_string(p_) + tail;
  }
  if (r_ == 1) return body;
  return "(" + body + ")/" + lamcf::to_string(r_);
}

int compare(const QuadSurd& x, const QuadSurd& y) {
  // Sign of (A + B*sqrt(Dx)) - C*sqrt(Dy), after clearing positive denominators.
  Int A = x.p() * y.r() - y.p() * x.r();
  Int B = x.q() * y.r();
  Int C = y.q() * x.r();
  if (x.D() == y.D()) return sign_of(A, B - C, x.D());
  const int su = sign_of(A, B, x.D());
  const int sw = sgn(C);
  if (su != sw) return su > sw ? 1 : -1;
  // Same sign: compare squares, u^2 - w^2 = (A^2 + B^2 Dx - C^2 Dy) + 2AB sqrt(Dx).
  Int rational_part = A * A + B * B * x.D() - C * C * y.D();
  Int root_part = 2 * A * B;
  return su * sign_of(rational_part, root_part, x.D());
}

int compare(const QuadSurd& x, const Rational& y) {
  return sign_of(x.p() * y.den() - y.num() * x.r(), x.q() * y.den(), x.D());
}

int sign(const QuadNumber& x) {
  return std::visit([](const auto& v) { return v.sign(); }, x);
}

long double to_long_double(const QuadNumber& x) {
  return std::visit([](const auto& v) { return v.to_long_double(); }, x);
}

std::string to_string(const QuadNumber& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

}  // namespace lamcf
