#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "lamcf/error.hpp"
#include "lamcf/hecke.hpp"
#include "lamcf/invariants.hpp"
#include "oracles.hpp"

using namespace lamcf;
using lamcf::testing::Rng;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an lamcf::Error");
  return ErrorCode::ParseError;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

using Parts = std::vector<std::int64_t>;

// All partitions of n with parts <= max_part, by recursion on the largest part.
void partitions(std::int64_t n, std::int64_t max_part, Parts& current, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = 1; part <= std::min(n, max_part); ++part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<Parts> partitions_descending(std::int64_t n) {
  std::vector<Parts> out;
  Parts current;
  partitions(n, n, current, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

const RegularCF kSqrt2 = RegularCF::periodic(ints({1}), ints({2}));
const RegularCF kOnePlusSqrt2 = RegularCF::periodic({}, ints({2}));

}  // namespace

TEST_SUITE("half_integers") {
  TEST_CASE("parse and print") {
    CHECK(parse_half_integer("1/2") == 1);
    CHECK(parse_half_integer("3/2") == 3);
    CHECK(parse_half_integer("2") == 4);
    CHECK(parse_half_integer("1") == 2);
    CHECK(half_integer_to_string(1) == "1/2");
    CHECK(half_integer_to_string(4) == "2");
    CHECK(code_of([] { parse_half_integer("1/3"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_half_integer("x"); }) == ErrorCode::ParseError);
  }
}

TEST_SUITE("validate_delta") {
  TEST_CASE("worked examples") {
    SingularityData triangles = validate_delta({1, 1, 1, 1}, 2);
    CHECK(triangles.doubled_parts() == Parts{1, 1, 1, 1});
    CHECK(triangles.to_string() == "(1/2, 1/2, 1/2, 1/2)");
    SingularityData hexagon = validate_delta({4}, 2);
    CHECK(hexagon.to_string() == "(2)");
    CHECK(code_of([] { validate_delta({2, 2, 2}, 2); }) == ErrorCode::SumMismatch);
  }

  TEST_CASE("order of the stored parts does not depend on input order") {
    CHECK(validate_delta({1, 3}, 2) == validate_delta({3, 1}, 2));
    CHECK(validate_delta({1, 3}, 2).doubled_parts() == Parts{3, 1});
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { validate_delta({}, 1); }) == ErrorCode::GenusTooSmall);
    CHECK(code_of([] { validate_delta({0, 4}, 2); }) == ErrorCode::PartTooSmall);
    CHECK(code_of([] { validate_delta({-1, 5}, 2); }) == ErrorCode::PartTooSmall);
    CHECK(code_of([] { validate_delta({}, 2); }) == ErrorCode::SumMismatch);
  }

  TEST_CASE("empty data for genus 0 and 1") {
    CHECK(SingularityData::empty_for_genus(1).doubled_parts().empty());
    CHECK(SingularityData::empty_for_genus(0).to_string() == "()");
    CHECK(code_of([] { SingularityData::empty_for_genus(2); }) ==
          ErrorCode::InvalidDeltaForLevel);
  }
}

TEST_SUITE("polygon_areas") {
  TEST_CASE("worked examples") {
    std::vector<PolygonArea> hexagon = polygon_areas(validate_delta({4}, 2));
    REQUIRE(hexagon.size() == 1);
    CHECK(hexagon[0].sides == 6);
    CHECK(hexagon[0].pi_multiple == 4);

    std::vector<PolygonArea> triangles = polygon_areas(validate_delta({1, 1, 1, 1}, 2));
    REQUIRE(triangles.size() == 4);
    for (const PolygonArea& a : triangles) {
      CHECK(a.sides == 3);
      CHECK(a.pi_multiple == 1);
    }
  }
}

TEST_SUITE("enumerate_delta") {
  TEST_CASE("genus 2 in decreasing lexicographic order") {
    std::vector<SingularityData> all = enumerate_delta(2);
    REQUIRE(all.size() == 5);
    const char* expected[] = {"(2)", "(3/2, 1/2)", "(1, 1)", "(1, 1/2, 1/2)",
                              "(1/2, 1/2, 1/2, 1/2)"};
    for (std::size_t i = 0; i < 5; ++i) CHECK(all[i].to_string() == expected[i]);
  }

  TEST_CASE("genus 3 has p(8) data") {
    CHECK(enumerate_delta(3).size() == 22);
  }

  TEST_CASE("matches an independent partition generator") {
    for (std::int64_t g = 2; g <= 6; ++g) {
      std::vector<SingularityData> all = enumerate_delta(g);
      std::vector<Parts> oracle = partitions_descending(4 * g - 4);
      REQUIRE(all.size() == oracle.size());
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].doubled_parts() == oracle[i]);
    }
  }

  TEST_CASE("counts, validity and total area up to genus 10") {
    for (std::int64_t g = 2; g <= 10; ++g) {
      std::uint64_t count = 0;
      for_each_delta(g, [&](const SingularityData& delta) {
        ++count;
        CHECK(delta.genus() == g);
        CHECK(validate_delta(delta.doubled_parts(), g) == delta);
        std::int64_t area = 0;
        for (const PolygonArea& a : polygon_areas(delta)) {
          CHECK(a.sides >= 3);
          area += a.pi_multiple;
        }
        CHECK(area == 4 * g - 4);
      });
      CHECK(count == testing::partition_count(static_cast<unsigned>(4 * g - 4)));
    }
  }

  TEST_CASE("genus range") {
    CHECK(code_of([] { enumerate_delta(1); }) == ErrorCode::GenusOutOfRange);
    CHECK(code_of([] { enumerate_delta(kMaxEnumerationGenus + 1); }) ==
          ErrorCode::GenusOutOfRange);
  }
}

TEST_SUITE("invariant_equal") {
  TEST_CASE("worked examples") {
    SingularityData hexagon = validate_delta({4}, 2);
    SingularityData squares = validate_delta({2, 2}, 2);
    LaminationInvariant a = make_invariant(kSqrt2, hexagon, 23);
    LaminationInvariant b = make_invariant(kOnePlusSqrt2, hexagon, 23);
    LaminationInvariant c = make_invariant(kSqrt2, squares, 23);
    CHECK(invariant_equal(a, a) == InvariantDecision::Equal);
    CHECK(invariant_equal(a, b) == InvariantDecision::Equal);
    CHECK(invariant_equal(a, c) == InvariantDecision::NotEqual);
    CHECK_FALSE(a.approximate());
  }

  TEST_CASE("make_invariant contract") {
    SingularityData hexagon = validate_delta({4}, 2);
    CHECK(code_of([&] { make_invariant(RegularCF::finite(ints({1, 2})), hexagon, 23); }) ==
          ErrorCode::UnsupportedKind);
    CHECK(code_of([&] { make_invariant(kSqrt2, hexagon, 11); }) ==
          ErrorCode::InvalidDeltaForLevel);
    LaminationInvariant x =
        make_invariant(RegularCF::periodic(ints({1}), ints({2, 2})), hexagon, 23);
    CHECK(x.theta == kSqrt2);
    LaminationInvariant y = make_invariant(kSqrt2, hexagon, 37);
    CHECK(code_of([&] { invariant_equal(x, y); }) == ErrorCode::LevelMismatch);
  }

  TEST_CASE("equivalence relation on random periodic invariants") {
    Rng rng(41);
    std::vector<SingularityData> deltas = enumerate_delta(2);
    const std::vector<std::vector<Int>> periods = {ints({1}), ints({2}), ints({1, 2}),
                                                   ints({2, 1, 1}), ints({3, 1})};
    std::vector<LaminationInvariant> sample;
    for (int i = 0; i < 100; ++i) {
      std::vector<Int> prefix;
      for (long j = 0, n = testing::uniform(rng, 0, 3); j < n; ++j) {
        prefix.emplace_back(testing::uniform(rng, j == 0 ? 0 : 1, 5));
      }
      std::vector<Int> period = periods[testing::uniform(rng, 0, 4)];
      std::rotate(period.begin(), period.begin() + testing::uniform(rng, 0, period.size() - 1),
                  period.end());
      const auto& delta = deltas[testing::uniform(rng, 0, 1)];
      sample.push_back(make_invariant(RegularCF::periodic(prefix, period), delta, 23));
    }
    for (const auto& x : sample) {
      CHECK(invariant_equal(x, x) == InvariantDecision::Equal);
      for (const auto& y : sample) {
        InvariantDecision xy = invariant_equal(x, y);
        CHECK(xy != InvariantDecision::Unknown);
        CHECK(xy == invariant_equal(y, x));
        if (x.delta != y.delta) CHECK(xy == InvariantDecision::NotEqual);
      }
    }
    for (std::size_t i = 0; i < 40; ++i) {
      for (std::size_t j = 0; j < 40; ++j) {
        if (invariant_equal(sample[i], sample[j]) != InvariantDecision::Equal) continue;
        for (std::size_t k = 0; k < 40; ++k) {
          if (invariant_equal(sample[j], sample[k]) == InvariantDecision::Equal) {
            CHECK(invariant_equal(sample[i], sample[k]) == InvariantDecision::Equal);
          }
        }
      }
    }
  }

  TEST_CASE("invariant under GL(2,Z) acting on theta") {
    Rng rng(42);
    SingularityData delta = validate_delta({3, 1}, 2);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 100; ++trial) {
      QuadSurd x = testing::random_positive_surd(rng);
      IntMat2 m = testing::random_unimodular(rng);
      if (x.linear_fractional(m.a(), m.b(), m.c(), m.d()).sign() <= 0) continue;
      RegularCF theta = expand_surd(x);
      LaminationInvariant before = make_invariant(theta, delta, 23);
      LaminationInvariant after = make_invariant(apply_gl2(m, theta), delta, 23);
      CHECK(invariant_equal(before, after) == InvariantDecision::Equal);
      ++checked;
    }
    CHECK(checked == 100);
  }

  TEST_CASE("prefix-approximate invariants") {
    SingularityData hexagon = validate_delta({4}, 2);
    std::vector<Int> twos(12, Int(2));
    LaminationInvariant approx = make_invariant(RegularCF::prefix_only(twos), hexagon, 23);
    CHECK(approx.approximate());
    CHECK(invariant_equal(approx, make_invariant(kSqrt2, hexagon, 23)) ==
          InvariantDecision::Equal);
    LaminationInvariant short_approx =
        make_invariant(RegularCF::prefix_only(ints({1, 1})), hexagon, 23);
    CHECK(invariant_equal(short_approx, make_invariant(kSqrt2, hexagon, 23)) ==
          InvariantDecision::Unknown);
  }
}

TEST_SUITE("invariant_of_stream") {
  TEST_CASE("three steps on X0(23)") {
    StreamConfig config;
    config.p0 = 1;
    config.steps = 3;
    config.level = 23;
    LegendreRun run = legendre_stream(config);
    LaminationInvariant inv = invariant_of_stream(run, Parts{4}, 23);
    CHECK(inv.theta.kind() == CfKind::PrefixOnly);
    CHECK(inv.theta.prefix().size() == 4);
    CHECK(inv.delta.genus() == 2);
    CHECK(inv.level == 23);
    CHECK(inv.approximate());
    CHECK(invariant_of_stream(run, validate_delta({4}, 2), 23).theta == inv.theta);
  }

  TEST_CASE("errors") {
    StreamConfig config;
    config.steps = 2;
    LegendreRun run = legendre_stream(config);
    CHECK(code_of([&] { invariant_of_stream(run, Parts{2, 2, 2}, 23); }) ==
          ErrorCode::InvalidDeltaForLevel);
    CHECK(code_of([&] { invariant_of_stream(run, Parts{4}, 11); }) ==
          ErrorCode::InvalidDeltaForLevel);
    CHECK(code_of([&] { invariant_of_stream(run, Parts{1}, 11); }) ==
          ErrorCode::InvalidDeltaForLevel);
    LaminationInvariant genus_one = invariant_of_stream(run, Parts{}, 11);
    CHECK(genus_one.delta.doubled_parts().empty());

    StreamConfig never;
    never.pred = parse_predicate("never");
    LegendreRun empty = legendre_stream(never);
    CHECK(code_of([&] { invariant_of_stream(empty, Parts{4}, 23); }) == ErrorCode::EmptyStream);
  }

  TEST_CASE("delta_for_level") {
    CHECK(delta_for_level({4}, 23) == validate_delta({4}, 2));
    CHECK(delta_for_level({}, 1).genus() == 0);
    CHECK(code_of([] { delta_for_level({}, 23); }) == ErrorCode::InvalidDeltaForLevel);
  }
}
