#pragma once

#include <cstddef>
#include <cstdint>

#include "lamcf/int_mat2.hpp"
#include "lamcf/quad_surd.hpp"
#include "lamcf/rational.hpp"
#include "lamcf/regular_cf.hpp"

namespace lamcf {

/// Depth sentinel: every available term (Finite and PrefixOnly fractions).
inline constexpr std::size_t kAllTerms = SIZE_MAX;

/// Work bound for surd expansion when the caller does not give one.
inline constexpr std::size_t kDefaultSurdTerms = std::size_t{1} << 20;

/// Canonical finite expansion of x >= 0 by the Euclidean algorithm.
RegularCF expand_rational(const Rational& x);

/// Convergent h_n/k_n at index `depth`. Finite fractions clamp the depth to
/// their length; PrefixOnly and periodic fractions throw DepthExceeded past
/// the known terms (kAllTerms on a periodic fraction is always exceeded).
Rational eval_cf(const RegularCF& cf, std::size_t depth = kAllTerms);

/// (1 p0; 0 1)(0 1; 1 p1)...(0 1; 1 p_depth) = (h_{n-1} h_n; k_{n-1} k_n).
IntMat2 cf_to_matrix(const RegularCF& cf, std::size_t depth);

/// Finite: last term >= 2 unless single-term. Periodic: primitive period and
/// shortest prefix. PrefixOnly is returned unchanged. Idempotent.
RegularCF canonicalize(const RegularCF& cf);
bool is_canonical(const RegularCF& cf);

/// Periodic expansion of a positive quadratic irrational; the period is
/// detected exactly by recurrence of the complete-quotient state (P, Q).
/// Throws PeriodNotFound when no state repeats within max_terms terms.
RegularCF expand_surd(const QuadSurd& x, std::size_t max_terms = kDefaultSurdTerms);

/// Exact value of a Finite (Rational) or EventuallyPeriodic (QuadSurd)
/// fraction. Throws UnsupportedKind for PrefixOnly.
QuadNumber value_of(const RegularCF& cf);

enum class TailDecision { Equivalent, NotEquivalent, Unknown };
std::string_view to_string(TailDecision d);

/// How much agreement counts as a witnessed common tail when a PrefixOnly
/// fraction is involved.
struct TailWitnessPolicy {
  std::size_t min_overlap = 8;
};

/// Whether two fractions share a tail (equivalently, are GL(2,Z)-equivalent).
/// Exact for Finite/periodic inputs. PrefixOnly evidence can confirm a
/// common tail but never refute one, except against a Finite fraction
/// (a rational is never equivalent to an irrational).
TailDecision tail_equivalent(const RegularCF& a, const RegularCF& b,
                             const TailWitnessPolicy& policy = {});

/// Canonical fraction of (a*x + b)/(c*x + d). The image must be positive.
RegularCF apply_gl2(const IntMat2& m, const RegularCF& cf);

}  // namespace lamcf
