#include "lamcf/gl2.hpp"

#include <algorithm>
#include <cmath>

#include "lamcf/cf.hpp"
#include "lamcf/error.hpp"

namespace lamcf {
namespace {

void require_det_one(const IntMat2& m) {
  if (m.det() != 1) {
    throw Error(ErrorCode::NotDeterminantOne, m.to_string() + " has determinant -1");
  }
}

}  // namespace

std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Hyperbolic: return "Hyperbolic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::Elliptic: return "Elliptic";
  }
  return "?";
}

std::string to_string(const BoundaryPoint& x) {
  if (std::holds_alternative<Infinity>(x)) return "oo";
  if (auto* r = std::get_if<Rational>(&x)) return r->to_string();
  return std::get<QuadSurd>(x).to_string();
}

IntMat2 multiply(const IntMat2& x, const IntMat2& y) { return x * y; }

IsometryClass classify(const IntMat2& m) {
  require_det_one(m);
  Int t = abs(m.trace());
  if (t > 2) return IsometryClass::Hyperbolic;
  if (t == 2) return IsometryClass::Parabolic;
  return IsometryClass::Elliptic;
}

std::vector<BoundaryPoint> fixed_points(const IntMat2& m) {
  if (m.is_plus_minus_identity()) {
    throw Error(ErrorCode::IdentityMatrix, "every point is fixed by " + m.to_string());
  }
  // x = (a x + b)/(c x + d)  <=>  c x^2 + (d - a) x - b = 0.
  std::vector<BoundaryPoint> out;
  if (m.c() == 0) {
    if (m.a() != m.d()) out.emplace_back(Rational(m.b(), m.d() - m.a()));
    out.emplace_back(Infinity{});
    return out;
  }
  Int disc = (m.a() - m.d()) * (m.a() - m.d()) + 4 * m.b() * m.c();
  if (disc < 0) return out;
  if (disc == 0) {
    out.emplace_back(Rational(m.a() - m.d(), 2 * m.c()));
    return out;
  }
  for (int s : {-1, 1}) {
    QuadNumber root = quadratic_root(m.c(), m.d() - m.a(), -m.b(), s);
    std::visit([&](auto&& v) { out.emplace_back(v); }, root);
  }
  std::sort(out.begin(), out.end(), [](const BoundaryPoint& x, const BoundaryPoint& y) {
    const auto value = [](const BoundaryPoint& p) {
      return std::holds_alternative<QuadSurd>(p) ? std::get<QuadSurd>(p).to_long_double()
                                                 : std::get<Rational>(p).to_long_double();
    };
    if (std::holds_alternative<QuadSurd>(x) && std::holds_alternative<QuadSurd>(y)) {
      return compare(std::get<QuadSurd>(x), std::get<QuadSurd>(y)) < 0;
    }
    return value(x) < value(y);
  });
  return out;
}

double geodesic_length(const Int& trace) {
  Int t = abs(trace);
  if (t <= 2) {
    throw Error(ErrorCode::NotHyperbolic, "trace " + to_string(trace) + " is not hyperbolic");
  }
  // Below 2^52 the trace converts to double exactly.
  if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 52) return 2.0 * std::acosh(t.get_d() / 2.0);
  // acosh(t/2) = log t + log((1 + sqrt(1 - 4/t^2))/2), the second term < 2^-100 here.
  return 2.0 * log_abs(t);
}

Axis axis_of(const IntMat2& m) {
  if (classify(m) != IsometryClass::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, m.to_string() + " is not hyperbolic");
  }
  std::vector<BoundaryPoint> ends = fixed_points(m);
  return Axis{ends[0], ends[1], m.trace(), geodesic_length(m.trace())};
}

bool in_hecke(const IntMat2& m, const Int& level) {
  if (level < 1) throw Error(ErrorCode::InvalidLevel, "level must be >= 1");
  return m.c() % level == 0;
}

CfDecomposition decompose_to_cf_generators(const IntMat2& m) {
  const auto fail = [&] {
    return Error(ErrorCode::NotDecomposable, m.to_string() + " is not a word in the generators");
  };
  // The second column of such a word is (h_k, k_k) with h_k/k_k = [p0; q_1..q_k].
  if (m.d() < 1 || m.b() < 0) throw fail();
  std::vector<Int> terms = expand_rational(Rational(m.b(), m.d())).prefix();
  const int expected_det = (terms.size() - 1) % 2 == 0 ? 1 : -1;
  if (expected_det != m.det()) {
    // Use the other expansion [.., t] = [.., t - 1, 1].
    if (terms.size() == 1 && terms[0] < 1) throw fail();
    terms.back() -= 1;
    terms.emplace_back(1);
  }
  CfDecomposition word{terms[0], std::vector<Int>(terms.begin() + 1, terms.end())};
  if (compose(word) != m) throw fail();
  return word;
}

IntMat2 compose(const CfDecomposition& word) {
  IntMat2 out = IntMat2::translation(word.p0);
  for (const Int& q : word.terms) out = out * IntMat2::cf_generator(q);
  return out;
}

std::complex<long double> mobius_apply(const IntMat2& m, std::complex<long double> z) {
  const long double a = to_long_double(m.a());
  const long double b = to_long_double(m.b());
  const long double c = to_long_double(m.c());
  const long double d = to_long_double(m.d());
  std::complex<long double> den = c * z + d;
  if (den == std::complex<long double>(0.0L, 0.0L)) {
    throw Error(ErrorCode::PoleAt, "c*z + d vanishes");
  }
  return (a * z + b) / den;
}

long double mobius_apply(const IntMat2& m, long double x) {
  const long double den = to_long_double(m.c()) * x + to_long_double(m.d());
  if (den == 0.0L) throw Error(ErrorCode::PoleAt, "c*x + d vanishes");
  return (to_long_double(m.a()) * x + to_long_double(m.b())) / den;
}

}  // namespace lamcf
