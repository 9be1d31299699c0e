#pragma once

#include <string>

#include "lamcf/bigint.hpp"

namespace lamcf {

/// 2x2 integer matrix (a b; c d) with determinant +1 or -1.
class IntMat2 {
 public:
  /// Throws NotUnimodular unless ad - bc = +-1.
  IntMat2(Int a, Int b, Int c, Int d);

  static IntMat2 identity();
  static IntMat2 translation(const Int& n);      // (1 n; 0 1)
  static IntMat2 cf_generator(const Int& term);  // (0 1; 1 term)

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  int det() const;  // +1 or -1
  Int trace() const { return a_ + d_; }
  IntMat2 inverse() const;
  bool is_plus_minus_identity() const;

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2&, const IntMat2&) = default;

  /// "(a b; c d)"
  std::string to_string() const;

 private:
  struct Unchecked {};
  IntMat2(Unchecked, Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Int a_, b_, c_, d_;
};

}  // namespace lamcf
