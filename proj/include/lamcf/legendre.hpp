#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamcf/error.hpp"
#include "lamcf/int_mat2.hpp"
#include "lamcf/regular_cf.hpp"

namespace lamcf {

/// Terms p0, p1, ... of a Legendre product, p0 >= 0 and p_i >= 1.
class TermSequence {
 public:
  explicit TermSequence(std::vector<Int> terms);

  const std::vector<Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Int& operator[](std::size_t i) const { return terms_[i]; }

  TermSequence extended(Int next) const;
  RegularCF as_prefix() const { return RegularCF::prefix_only(terms_); }

  friend bool operator==(const TermSequence&, const TermSequence&) = default;

 private:
  std::vector<Int> terms_;
};

/// Admissibility test on traces, standing in for the set of traces whose
/// axes are simple closed geodesics.
struct TracePredicate {
  std::string name;
  std::function<bool(const Int&)> test;
};

/// |t| > 2.
TracePredicate hyperbolic_predicate();

/// "hyperbolic", "never", "prime" (|t| prime) or "mod:M:R" (t = R mod M).
/// Throws UnknownPredicate.
TracePredicate parse_predicate(std::string_view spec);

/// gamma_k = (1 p0; 0 1)(0 1; 1 p1)...(0 1; 1 p_k). Same matrix as cf_to_matrix.
IntMat2 build_gamma(const TermSequence& p, std::size_t k);

/// Closed-form trace polynomials for k <= 3; UnsupportedIndex beyond.
Int trace_formula(const TermSequence& p, std::size_t k);

/// tr(gamma_{n+1}) = a * p_{n+1} + b, where (A B; C D) = gamma_n gives
/// a = D and b = B + C.
struct AffineTrace {
  Int a;
  Int b;
};
AffineTrace trace_affine_coefficients(const TermSequence& p, std::size_t n);

/// Extends p by the smallest x in [1, search_bound] with a x + b > 2 and
/// pred(a x + b). Throws NoAdmissibleTerm.
TermSequence select_next_term(const TermSequence& p, const TracePredicate& pred,
                              std::uint64_t search_bound);

struct LegendreStep {
  std::size_t k;
  Int term;  // p_k
  IntMat2 gamma;
  Int trace;
  bool in_gamma0N;
  /// Even k (det +1): the candidates whose axes should be singletons.
  bool singleton_candidate;
  /// 2 arccosh(|t|/2) for det +1, 2 arcsinh(|t|/2) for det -1.
  double axis_length;
};

struct LegendreRun {
  TermSequence terms;
  std::vector<LegendreStep> steps;
  /// Set when the search stopped early; steps holds the partial stream.
  std::optional<Error> error;
};

struct StreamConfig {
  Int p0 = 0;
  TracePredicate pred = hyperbolic_predicate();
  std::size_t steps = 1;
  std::uint64_t search_bound = 1'000'000;
  Int level = 1;
};

/// Runs select_next_term `steps` times from [p0], recording gamma_1..gamma_steps.
LegendreRun legendre_stream(const StreamConfig& config);

}  // namespace lamcf
