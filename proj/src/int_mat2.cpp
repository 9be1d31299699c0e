#include "lamcf/int_mat2.hpp"

#include "lamcf/error.hpp"

namespace lamcf {

IntMat2::IntMat2(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Int det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular,
                "determinant of " + to_string() + " is " + lamcf::to_string(det));
  }
}

IntMat2 IntMat2::identity() { return IntMat2(Unchecked{}, 1, 0, 0, 1); }
IntMat2 IntMat2::translation(const Int& n) { return IntMat2(Unchecked{}, 1, n, 0, 1); }
IntMat2 IntMat2::cf_generator(const Int& term) { return IntMat2(Unchecked{}, 0, 1, 1, term); }

int IntMat2::det() const { return a_ * d_ - b_ * c_ > 0 ? 1 : -1; }

IntMat2 IntMat2::inverse() const {
  if (det() == 1) return IntMat2(Unchecked{}, d_, -b_, -c_, a_);
  return IntMat2(Unchecked{}, -d_, b_, c_, -a_);
}

bool IntMat2::is_plus_minus_identity() const {
  return b_ == 0 && c_ == 0 && a_ == d_ && (a_ == 1 || a_ == -1);
}

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
  return IntMat2(IntMat2::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                 x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string IntMat2::to_string() const {
  return "(" + lamcf::to_string(a_) + " " + lamcf::to_string(b_) + "; " + lamcf::to_string(c_) +
         " " + lamcf::to_string(d_) + ")";
}

}  // namespace lamcf
