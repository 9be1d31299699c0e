#include "lamcf/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lamcf/error.hpp"
#include "lamcf/hecke.hpp"

namespace lamcf {
namespace {

std::int64_t parse_int64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad part '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::int64_t parse_half_integer(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return 2 * parse_int64(text);
  if (text.substr(slash + 1) != "2") {
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a half-integer");
  }
  return parse_int64(text.substr(0, slash));
}

std::string half_integer_to_string(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

SingularityData SingularityData::empty_for_genus(std::int64_t genus) {
  if (genus < 0 || genus > 1) {
    throw Error(ErrorCode::InvalidDeltaForLevel,
                "an empty singularity datum needs genus 0 or 1, got " + std::to_string(genus));
  }
  return SingularityData({}, genus);
}

std::vector<std::int64_t> SingularityData::polygon_sides() const {
  std::vector<std::int64_t> out;
  out.reserve(doubled_.size());
  for (std::int64_t k2 : doubled_) out.push_back(k2 + 2);
  return out;
}

std::string SingularityData::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i > 0) out += ", ";
    out += half_integer_to_string(doubled_[i]);
  }
  return out + ")";
}

SingularityData validate_delta(std::vector<std::int64_t> doubled_parts, std::int64_t genus) {
  if (genus < 2) {
    throw Error(ErrorCode::GenusTooSmall,
                "singularity data need genus >= 2, got " + std::to_string(genus));
  }
  for (std::int64_t k2 : doubled_parts) {
    if (k2 < 1) {
      throw Error(ErrorCode::PartTooSmall,
                  "part " + half_integer_to_string(k2) + " is below 1/2");
    }
  }
  const std::int64_t sum = std::accumulate(doubled_parts.begin(), doubled_parts.end(),
                                           std::int64_t{0});
  const std::int64_t expected = 4 * genus - 4;
  if (sum != expected) {
    throw Error(ErrorCode::SumMismatch, "parts sum to " + half_integer_to_string(sum) +
                                            ", expected " + half_integer_to_string(expected));
  }
  std::sort(doubled_parts.begin(), doubled_parts.end(), std::greater<>());
  return SingularityData(std::move(doubled_parts), genus);
}

std::vector<PolygonArea> polygon_areas(const SingularityData& delta) {
  std::vector<PolygonArea> out;
  for (std::int64_t k2 : delta.doubled_parts()) out.push_back({k2 + 2, k2});
  return out;
}

void for_each_delta(std::int64_t genus, const std::function<void(const SingularityData&)>& visit) {
  if (genus < 2 || genus > kMaxEnumerationGenus) {
    throw Error(ErrorCode::GenusOutOfRange,
                "enumeration supports 2 <= g <= 30, got " + std::to_string(genus));
  }
  const std::int64_t n = 4 * genus - 4;
  std::vector<std::int64_t> parts{n};
  while (true) {
    visit(validate_delta(parts, genus));
    // Next partition in decreasing lexicographic order.
    std::int64_t ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    const std::int64_t v = parts.back() - 1;
    parts.back() = v;
    std::int64_t rest = ones + 1;
    while (rest >= v) {
      parts.push_back(v);
      rest -= v;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

std::vector<SingularityData> enumerate_delta(std::int64_t genus) {
  std::vector<SingularityData> out;
  for_each_delta(genus, [&](const SingularityData& d) { out.push_back(d); });
  return out;
}

std::string_view to_string(InvariantDecision d) {
  switch (d) {
    case InvariantDecision::Equal: return "Equal";
    case InvariantDecision::NotEqual: return "NotEqual";
    case InvariantDecision::Unknown: return "Unknown";
  }
  return "?";
}

SingularityData delta_for_level(const std::vector<std::int64_t>& doubled_parts,
                                std::int64_t level) {
  const std::int64_t genus = surface_invariants(level).genus;
  if (genus <= 1) {
    if (!doubled_parts.empty()) {
      throw Error(ErrorCode::InvalidDeltaForLevel,
                  "X0(" + std::to_string(level) + ") has genus " + std::to_string(genus) +
                      "; only the empty singularity datum is allowed");
    }
    return SingularityData::empty_for_genus(genus);
  }
  try {
    return validate_delta(doubled_parts, genus);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidDeltaForLevel,
                "X0(" + std::to_string(level) + ") has genus " + std::to_string(genus) + ": " +
                    e.detail());
  }
}

LaminationInvariant make_invariant(const RegularCF& theta, const SingularityData& delta,
                                   std::int64_t level) {
  if (theta.kind() == CfKind::Finite) {
    throw Error(ErrorCode::UnsupportedKind, "the slope of a lamination is irrational");
  }
  const std::int64_t genus = surface_invariants(level).genus;
  if (delta.genus() != genus) {
    throw Error(ErrorCode::InvalidDeltaForLevel,
                "delta " + delta.to_string() + " is for genus " + std::to_string(delta.genus()) +
                    " but X0(" + std::to_string(level) + ") has genus " + std::to_string(genus));
  }
  return LaminationInvariant{canonicalize(theta), delta, level};
}

InvariantDecision invariant_equal(const LaminationInvariant& x, const LaminationInvariant& y,
                                  const TailWitnessPolicy& policy) {
  if (x.level != y.level) {
    throw Error(ErrorCode::LevelMismatch, "levels " + std::to_string(x.level) + " and " +
                                              std::to_string(y.level) + " differ");
  }
  if (x.delta != y.delta) return InvariantDecision::NotEqual;
  switch (tail_equivalent(x.theta, y.theta, policy)) {
    case TailDecision::Equivalent: return InvariantDecision::Equal;
    case TailDecision::NotEquivalent: return InvariantDecision::NotEqual;
    case TailDecision::Unknown: return InvariantDecision::Unknown;
  }
  return InvariantDecision::Unknown;
}

LaminationInvariant invariant_of_stream(const LegendreRun& run, const SingularityData& delta,
                                        std::int64_t level) {
  if (run.steps.empty()) throw Error(ErrorCode::EmptyStream, "the Legendre run emitted no steps");
  return make_invariant(run.terms.as_prefix(), delta, level);
}

LaminationInvariant invariant_of_stream(const LegendreRun& run,
                                        const std::vector<std::int64_t>& doubled_parts,
                                        std::int64_t level) {
  if (run.steps.empty()) throw Error(ErrorCode::EmptyStream, "the Legendre run emitted no steps");
  return make_invariant(run.terms.as_prefix(), delta_for_level(doubled_parts, level), level);
}

}  // namespace lamcf
