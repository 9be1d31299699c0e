#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lamcf/cf.hpp"
#include "lamcf/legendre.hpp"
#include "lamcf/regular_cf.hpp"

namespace lamcf {

/// Half-integers are carried doubled: "1/2" -> 1, "2" -> 4.
std::int64_t parse_half_integer(std::string_view text);
std::string half_integer_to_string(std::int64_t doubled);

/// Singularity data: the unordered parts k_i > 0 (half-integers) with
/// sum k_i = 2g - 2, one per ideal (2 k_i + 2)-gon of the principal region.
/// Parts are stored doubled and sorted in decreasing order.
class SingularityData {
 public:
  /// The only datum allowed on genus 0 and 1 surfaces.
  static SingularityData empty_for_genus(std::int64_t genus);

  const std::vector<std::int64_t>& doubled_parts() const { return doubled_; }
  std::int64_t genus() const { return genus_; }
  std::vector<std::int64_t> polygon_sides() const;
  std::string to_string() const;  // "(3/2, 1/2)"

  friend bool operator==(const SingularityData&, const SingularityData&) = default;

 private:
  friend SingularityData validate_delta(std::vector<std::int64_t>, std::int64_t);
  SingularityData(std::vector<std::int64_t> doubled, std::int64_t genus)
      : doubled_(std::move(doubled)), genus_(genus) {}

  std::vector<std::int64_t> doubled_;
  std::int64_t genus_;
};

/// Throws GenusTooSmall (g < 2), PartTooSmall, SumMismatch.
SingularityData validate_delta(std::vector<std::int64_t> doubled_parts, std::int64_t genus);

/// Area (n - 2) pi of each ideal n-gon, as an exact multiple of pi.
struct PolygonArea {
  std::int64_t sides;
  std::int64_t pi_multiple;
};
std::vector<PolygonArea> polygon_areas(const SingularityData& delta);

inline constexpr std::int64_t kMaxEnumerationGenus = 30;

/// Every singularity datum of genus g (partitions of 4g - 4 in the doubled
/// representation), in decreasing lexicographic order of the sorted parts.
/// Throws GenusOutOfRange outside 2 <= g <= 30.
void for_each_delta(std::int64_t genus, const std::function<void(const SingularityData&)>& visit);
std::vector<SingularityData> enumerate_delta(std::int64_t genus);

/// The pair (Theta, Delta) on a fixed level N.
struct LaminationInvariant {
  RegularCF theta;
  SingularityData delta;
  std::int64_t level;

  /// A PrefixOnly theta only approximates the slope class.
  bool approximate() const { return theta.kind() == CfKind::PrefixOnly; }
};

/// Checks theta is infinite, canonicalizes it, and checks delta against the
/// genus of X0(level). Throws UnsupportedKind, InvalidDeltaForLevel.
LaminationInvariant make_invariant(const RegularCF& theta, const SingularityData& delta,
                                   std::int64_t level);

enum class InvariantDecision { Equal, NotEqual, Unknown };
std::string_view to_string(InvariantDecision d);

/// Equal iff the slopes share a tail and the deltas coincide. Throws LevelMismatch.
InvariantDecision invariant_equal(const LaminationInvariant& x, const LaminationInvariant& y,
                                  const TailWitnessPolicy& policy = {});

/// Packages the terms of a Legendre run as a prefix-approximate invariant.
/// Throws EmptyStream, InvalidDeltaForLevel.
LaminationInvariant invariant_of_stream(const LegendreRun& run, const SingularityData& delta,
                                        std::int64_t level);
LaminationInvariant invariant_of_stream(const LegendreRun& run,
                                        const std::vector<std::int64_t>& doubled_parts,
                                        std::int64_t level);

/// Validates raw doubled parts against the genus of X0(level).
SingularityData delta_for_level(const std::vector<std::int64_t>& doubled_parts, std::int64_t level);

}  // namespace lamcf
