#pragma once

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

#include "lamcf/int_mat2.hpp"
#include "lamcf/quad_surd.hpp"
#include "lamcf/rational.hpp"

namespace lamcf {

enum class IsometryClass { Hyperbolic, Parabolic, Elliptic };
std::string_view to_string(IsometryClass c);

/// The cusp at infinity of the extended upper half-plane.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

using BoundaryPoint = std::variant<Rational, QuadSurd, Infinity>;
std::string to_string(const BoundaryPoint& x);

/// The invariant geodesic of a hyperbolic matrix. Endpoints are exact and
/// ordered lo < hi; the length is the only floating quantity and is a pure
/// function of the trace.
struct Axis {
  BoundaryPoint lo;
  BoundaryPoint hi;
  Int trace;
  double length;
};

IntMat2 multiply(const IntMat2& x, const IntMat2& y);

/// |tr| > 2, = 2, < 2. Requires det = +1 (NotDeterminantOne otherwise).
IsometryClass classify(const IntMat2& m);

/// Boundary fixed points, sorted ascending with Infinity last:
/// two for hyperbolic, one for parabolic, none for elliptic. A det -1
/// matrix always has two. Throws IdentityMatrix for m = +-identity.
std::vector<BoundaryPoint> fixed_points(const IntMat2& m);

/// 2*arccosh(|trace|/2); NotHyperbolic when |trace| <= 2.
double geodesic_length(const Int& trace);

Axis axis_of(const IntMat2& m);

/// c = 0 (mod level). InvalidLevel when level < 1.
bool in_hecke(const IntMat2& m, const Int& level);

/// m = (1 p0; 0 1)(0 1; 1 q_1)...(0 1; 1 q_k), p0 >= 0, q_i >= 1.
struct CfDecomposition {
  Int p0;
  std::vector<Int> terms;
};

/// Euclidean peeling of the second column (b, d); throws NotDecomposable if
/// no word with nonnegative translation and positive generators exists.
CfDecomposition decompose_to_cf_generators(const IntMat2& m);
IntMat2 compose(const CfDecomposition& word);

/// (a z + b)/(c z + d); PoleAt when c z + d = 0.
std::complex<long double> mobius_apply(const IntMat2& m, std::complex<long double> z);
long double mobius_apply(const IntMat2& m, long double x);

}  // namespace lamcf
