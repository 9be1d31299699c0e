// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "lamcf/cf.hpp"
#include "lamcf/error.hpp"
#include "lamcf/gl2.hpp"
#include "lamcf/hecke.hpp"
#include "lamcf/invariants.hpp"
#include "lamcf/legendre.hpp"
#include "oracles.hpp"

using namespace lamcf;
using lamcf::testing::Rng;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) first_failure = what;
    ok = ok && condition;
  }
};

std::vector<Int> random_terms(Rng& rng, std::size_t length, long max_term) {
  std::vector<Int> out{Int(testing::uniform(rng, 0, max_term))};
  while (out.size() < length) out.emplace_back(testing::uniform(rng, 1, max_term));
  return out;
}

IntMat2 product_of(const std::vector<Int>& p, std::size_t k) {
  IntMat2 m = IntMat2::translation(p[0]);
  for (std::size_t i = 1; i <= k; ++i) m = m * IntMat2(0, 1, 1, p[i]);
  return m;
}

bool rotation_equal(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t s = 0; s < x.size(); ++s) {
    bool same = true;
    for (std::size_t i = 0; i < x.size() && same; ++i) same = x[(i + s) % x.size()] == y[i];
    if (same) return true;
  }
  return false;
}

// 1. Closed trace forms against matrix products.
void trace_identities(Check& c) {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Int> p = random_terms(rng, 4, 20);
    const Int closed[4] = {
        Int(2),
        p[0] + p[1],
        2 + p[0] * p[1] + p[1] * p[2],
        p[0] + p[1] + p[2] + p[3] + p[0] * p[1] * p[2] + p[1] * p[2] * p[3],
    };
    TermSequence seq(p);
    for (std::size_t k = 0; k <= 3; ++k) {
      c.expect(product_of(p, k).trace() == closed[k], "closed form vs product");
      c.expect(build_gamma(seq, k).trace() == closed[k], "closed form vs build_gamma");
      c.expect(trace_formula(seq, k) == closed[k], "closed form vs trace_formula");
    }
  }
}

// 2. tr(gamma_{n+1}) = a x + b.
void affine_law(Check& c) {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    for (std::size_t n = 0; n <= 12; ++n) {
      std::vector<Int> p = random_terms(rng, n + 1, 20);
      AffineTrace affine = trace_affine_coefficients(TermSequence(p), n);
      for (long x = 1; x <= 10; ++x) {
        std::vector<Int> longer = p;
        longer.emplace_back(x);
        c.expect(product_of(longer, n + 1).trace() == affine.a * x + affine.b, "affine law");
      }
    }
  }
}

// 3. expand_rational and eval_cf are inverse on reduced fractions.
void rational_round_trip(Check& c) {
  for (long q = 1; q <= 500; ++q) {
    for (long p = 0; p <= 500; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      RegularCF cf = expand_rational(x);
      c.expect(eval_cf(cf) == x, "round trip " + x.to_string());
      const auto& terms = cf.prefix();
      c.expect(terms.size() == 1 || terms.back() >= 2, "canonical form " + x.to_string());
      c.expect(testing::nested_eval(terms) == x, "nested evaluation " + x.to_string());
    }
  }
}

// 4. GL(2,Z)-images share a tail; distinct periods are inequivalent.
void tail_classes(Check& c) {
  Rng rng(104);
  int forward = 0;
  while (forward < 200) {
    QuadSurd x = testing::random_positive_surd(rng);
    IntMat2 m = testing::random_unimodular(rng);
    QuadSurd image_value = x.linear_fractional(m.a(), m.b(), m.c(), m.d());
    if (image_value.sign() <= 0) continue;
    RegularCF cf = expand_surd(x);
    c.expect(tail_equivalent(cf, apply_gl2(m, cf)) == TailDecision::Equivalent, "forward");
    c.expect(tail_equivalent(cf, expand_surd(image_value)) == TailDecision::Equivalent,
             "forward (independent image)");
    ++forward;
  }

  std::vector<IntMat2> small;
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b)
      for (long cc = -5; cc <= 5; ++cc)
        for (long d = -5; d <= 5; ++d) {
          const long det = a * d - b * cc;
          if (det == 1 || det == -1) small.emplace_back(a, b, cc, d);
        }

  int converse = 0;
  while (converse < 50) {
    RegularCF x = RegularCF::finite({Int(0)});
    RegularCF y = x;
    if (converse % 2 == 0) {
      auto random_periodic = [&] {
        std::vector<Int> prefix;
        std::vector<Int> period;
        for (long i = 0, n = testing::uniform(rng, 0, 2); i < n; ++i) {
          prefix.emplace_back(testing::uniform(rng, i == 0 ? 0 : 1, 5));
        }
        for (long i = 0, n = testing::uniform(rng, 1, 4); i < n; ++i) {
          period.emplace_back(testing::uniform(rng, 1, 5));
        }
        return canonicalize(RegularCF::periodic(prefix, period));
      };
      x = random_periodic();
      y = random_periodic();
    } else {
      // Same quadratic field, so only the matrix search can separate them.
      long radicand = testing::uniform(rng, 2, 30);
      while (is_square(Int(radicand))) radicand = testing::uniform(rng, 2, 30);
      auto in_field = [&] {
        while (true) {
          QuadNumber v = QuadSurd::make(testing::uniform(rng, 0, 9), testing::uniform(rng, 1, 4),
                                        radicand, testing::uniform(rng, 1, 6));
          if (auto* s = std::get_if<QuadSurd>(&v); s && s->sign() > 0) return expand_surd(*s);
        }
      };
      x = in_field();
      y = in_field();
    }
    if (rotation_equal(x.period(), y.period())) continue;
    c.expect(tail_equivalent(x, y) == TailDecision::NotEquivalent, "converse decision");
    QuadSurd vx = std::get<QuadSurd>(value_of(x));
    QuadSurd vy = std::get<QuadSurd>(value_of(y));
    for (const IntMat2& m : small) {
      c.expect(!(vx.linear_fractional(m.a(), m.b(), m.c(), m.d()) == vy),
               "converse witness " + m.to_string());
    }
    ++converse;
  }

  // Control: the same search does find a witness for an equivalent pair.
  QuadSurd x = QuadSurd::make_irrational(0, 1, 7, 1);
  QuadSurd y = x.linear_fractional(2, 1, 1, 1);
  bool found = false;
  for (const IntMat2& m : small) {
    found = found || x.linear_fractional(m.a(), m.b(), m.c(), m.d()) == y;
  }
  c.expect(found, "search finds a known witness");
}

// 5. Genus formula against brute-force counts.
void genus_cross_validation(Check& c) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    SurfaceInvariants s = surface_invariants(n);
    const std::int64_t mu = index_bruteforce(n);
    const std::int64_t e2 = testing::count_roots_x2_plus_1(n);
    const std::int64_t e3 = testing::count_roots_x2_plus_x_plus_1(n);
    const std::int64_t cusps = testing::count_cusps(n);
    const std::int64_t twelve_g = mu - 3 * e2 - 4 * e3 - 6 * cusps + 12;
    c.expect(twelve_g % 12 == 0, "brute-force genus integrality N=" + std::to_string(n));
    c.expect(s.genus == twelve_g / 12, "genus N=" + std::to_string(n));
  }
  for (std::int64_t n = 1; n <= 5000; ++n) {
    SurfaceInvariants s = surface_invariants(n);
    c.expect(12 * (s.genus - 1) + 3 * s.elliptic2 + 4 * s.elliptic3 + 6 * s.cusps == s.index,
             "identity N=" + std::to_string(n));
  }
  c.expect(surface_invariants(1).genus == 0, "g(1)");
  c.expect(surface_invariants(11).genus == 1, "g(11)");
  c.expect(surface_invariants(23).genus == 2, "g(23)");
}

// 6. Singularity data.
void singularity_data(Check& c) {
  std::vector<SingularityData> two = enumerate_delta(2);
  c.expect(two.size() == 5, "five data in genus 2");
  bool hexagon = false;
  bool triangles = false;
  for (const SingularityData& d : two) {
    hexagon = hexagon || d.doubled_parts() == std::vector<std::int64_t>{4};
    triangles = triangles || d.doubled_parts() == std::vector<std::int64_t>{1, 1, 1, 1};
  }
  c.expect(hexagon, "(2) present");
  c.expect(triangles, "(1/2, 1/2, 1/2, 1/2) present");
  for (std::int64_t g = 2; g <= 10; ++g) {
    std::uint64_t count = 0;
    for_each_delta(g, [&](const SingularityData& d) {
      ++count;
      std::int64_t area = 0;
      for (const PolygonArea& a : polygon_areas(d)) area += a.pi_multiple;
      c.expect(area == 4 * g - 4, "area sum g=" + std::to_string(g));
    });
    c.expect(count == testing::partition_count(static_cast<unsigned>(4 * g - 4)),
             "count g=" + std::to_string(g));
  }
}

// 7. Fixed points and conjugation-invariant length.
void axis_geometry(Check& c) {
  Rng rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    IntMat2 m = testing::random_hyperbolic(rng);
    Axis axis = axis_of(m);
    for (const BoundaryPoint& p : {axis.lo, axis.hi}) {
      if (std::holds_alternative<Infinity>(p)) continue;
      const long double x = std::holds_alternative<QuadSurd>(p)
                                ? std::get<QuadSurd>(p).to_long_double()
                                : std::get<Rational>(p).to_long_double();
      c.expect(std::fabs(static_cast<double>(mobius_apply(m, x) - x)) < 1e-12,
               "fixed point of " + m.to_string());
    }
    const double expected = 2.0 * std::acosh(std::fabs(m.trace().get_d()) / 2.0);
    c.expect(std::fabs(axis.length - expected) < 1e-12, "length formula " + m.to_string());
    IntMat2 g = testing::random_unimodular(rng);
    c.expect(axis_of(g * m * g.inverse()).length == axis.length, "conjugation " + m.to_string());
  }
}

// 8. invariant_equal is an equivalence relation, GL(2,Z)-invariant, delta-sensitive.
void invariant_contract(Check& c) {
  Rng rng(108);
  const std::vector<SingularityData> deltas = enumerate_delta(2);
  std::vector<LaminationInvariant> sample;
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> prefix;
    std::vector<Int> period;
    for (long j = 0, n = testing::uniform(rng, 0, 3); j < n; ++j) {
      prefix.emplace_back(testing::uniform(rng, j == 0 ? 0 : 1, 4));
    }
    for (long j = 0, n = testing::uniform(rng, 1, 2); j < n; ++j) {
      period.emplace_back(testing::uniform(rng, 1, 2));
    }
    const SingularityData& delta = deltas[static_cast<std::size_t>(testing::uniform(rng, 0, 1))];
    sample.push_back(make_invariant(RegularCF::periodic(prefix, period), delta, 23));
  }
  const std::size_t n = sample.size();
  std::vector<std::vector<InvariantDecision>> table(n, std::vector<InvariantDecision>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = invariant_equal(sample[i], sample[j]);
  for (std::size_t i = 0; i < n; ++i) {
    c.expect(table[i][i] == InvariantDecision::Equal, "reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      c.expect(table[i][j] == table[j][i], "symmetric");
      c.expect(table[i][j] != InvariantDecision::Unknown, "decided");
      if (sample[i].delta != sample[j].delta) {
        c.expect(table[i][j] == InvariantDecision::NotEqual, "delta mismatch");
      }
      if (table[i][j] != InvariantDecision::Equal) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (table[j][k] == InvariantDecision::Equal) {
          c.expect(table[i][k] == InvariantDecision::Equal, "transitive");
        }
      }
    }
  }

  int acted = 0;
  while (acted < 100) {
    QuadSurd x = testing::random_positive_surd(rng);
    IntMat2 m = testing::random_unimodular(rng);
    if (x.linear_fractional(m.a(), m.b(), m.c(), m.d()).sign() <= 0) continue;
    RegularCF theta = expand_surd(x);
    const SingularityData& delta = deltas[static_cast<std::size_t>(acted) % deltas.size()];
    LaminationInvariant before = make_invariant(theta, delta, 23);
    LaminationInvariant after = make_invariant(apply_gl2(m, theta), delta, 23);
    c.expect(invariant_equal(before, after) == InvariantDecision::Equal, "GL(2,Z) invariance");
    const SingularityData& other = deltas[(static_cast<std::size_t>(acted) + 1) % deltas.size()];
    c.expect(invariant_equal(before, make_invariant(theta, other, 23)) ==
                 InvariantDecision::NotEqual,
             "delta forces NotEqual");
    ++acted;
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "trace identities, 1000 tuples", 1.0, trace_identities},
      {2, "affine trace law, n <= 12, x in 1..10", 1.0, affine_law},
      {3, "rational round trip, 0 <= p, q <= 500", 5.0, rational_round_trip},
      {4, "GL(2,Z) tail classes, forward and converse", 10.0, tail_classes},
      {5, "genus cross-validation", 10.0, genus_cross_validation},
      {6, "singularity data", 1.0, singularity_data},
      {7, "axis geometry, 500 matrices", 5.0, axis_geometry},
      {8, "invariant equality contract", 5.0, invariant_contract},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criterion.limit_seconds, "time limit exceeded");
    failures += check.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.3f s, limit %.0f s)%s%s\n", check.ok ? "PASS" : "FAIL",
                criterion.id, criterion.name, seconds, criterion.limit_seconds,
                check.ok ? "" : ": ", check.first_failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
