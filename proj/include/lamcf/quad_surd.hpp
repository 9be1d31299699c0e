#pragma once

#include <string>
#include <variant>

#include "lamcf/bigint.hpp"
#include "lamcf/rational.hpp"

namespace lamcf {

class QuadSurd;

/// A real quadratic number: rational, or irrational of the form (p + q*sqrt(D))/r.
using QuadNumber = std::variant<Rational, QuadSurd>;

/// Exact irrational (p + q*sqrt(D))/r.
///
/// Invariants: D > 1 square-free, q != 0, r > 0, gcd(p, q, r) = 1.
/// Two surds are equal iff their normalized coordinates are equal.
class QuadSurd {
 public:
  /// Builds (p + q*sqrt(radicand))/r, extracting square factors from the
  /// radicand. Returns a Rational when the value is rational.
  static QuadNumber make(const Int& p, const Int& q, const Int& radicand, const Int& r);

  /// Like make() but throws ParseError if the value turns out rational.
  static QuadSurd make_irrational(const Int& p, const Int& q, const Int& radicand, const Int& r);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& D() const { return D_; }

  int sign() const;
  Int floor() const;
  QuadSurd conjugate() const;

  /// (a*x + b)/(c*x + d) for any integer matrix with ad - bc != 0.
  QuadSurd linear_fractional(const Int& a, const Int& b, const Int& c, const Int& d) const;

  QuadSurd operator-() const;
  QuadSurd operator+(const Int& n) const;
  QuadSurd operator-(const Int& n) const;

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

  long double to_long_double() const;
  /// "(p + q*sqrt(D))/r" with the trivial pieces dropped.
  std::string to_string() const;

 private:
  QuadSurd(Int p, Int q, Int r, Int D);
  void normalize();

  Int p_, q_, r_, D_;
};

/// Exact sign of x - y. Both surds must share D, otherwise the comparison
/// falls back to sign of a mixed expression evaluated exactly.
int compare(const QuadSurd& x, const QuadSurd& y);
int compare(const QuadSurd& x, const Rational& y);

/// Square-free decomposition n = s^2 * core by trial division up to sqrt(n).
struct SquareFreeSplit {
  Int square_root_part;  // s
  Int core;
};
SquareFreeSplit square_free_split(const Int& n);

/// Root (-b + root_sign*sqrt(b^2 - 4ac))/(2a) of a x^2 + b x + c = 0, with the
/// form reduced to primitive first so only its (GL(2,Z)-invariant)
/// discriminant is factored.
QuadNumber quadratic_root(const Int& a, const Int& b, const Int& c, int root_sign);

int sign(const QuadNumber& x);
long double to_long_double(const QuadNumber& x);
std::string to_string(const QuadNumber& x);

}  // namespace lamcf
