#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lamcf/bigint.hpp"

namespace lamcf {

enum class CfKind { Finite, EventuallyPeriodic, PrefixOnly };

std::string_view to_string(CfKind kind);

/// Regular continued fraction [p0; p1, p2, ...] with p0 >= 0 and p_i >= 1.
///
/// Finite: the value is rational. EventuallyPeriodic: prefix followed by the
/// period repeated forever (a quadratic irrational). PrefixOnly: the first
/// terms of an infinite fraction whose remaining terms are unknown.
///
/// The factories check term positivity only; use canonicalize() for the
/// canonical form.
class RegularCF {
 public:
  static RegularCF finite(std::vector<Int> terms);
  static RegularCF periodic(std::vector<Int> prefix, std::vector<Int> period);
  static RegularCF prefix_only(std::vector<Int> terms);

  CfKind kind() const { return kind_; }
  const std::vector<Int>& prefix() const { return prefix_; }
  const std::vector<Int>& period() const { return period_; }

  bool is_infinite() const { return kind_ != CfKind::Finite; }

  /// Number of known terms; nullopt for periodic fractions.
  std::optional<std::size_t> known_terms() const;
  bool has_term(std::size_t i) const;
  /// Term p_i; throws DepthExceeded if unknown or past the end.
  const Int& term(std::size_t i) const;

  friend bool operator==(const RegularCF&, const RegularCF&) = default;

  /// Compact notation: "[3; 7, 16]", "[1; (2)]", "[1; 2, 3, ...]".
  std::string to_string() const;
  static RegularCF parse(std::string_view text);

 private:
  RegularCF(CfKind kind, std::vector<Int> prefix, std::vector<Int> period);

  CfKind kind_;
  std::vector<Int> prefix_;
  std::vector<Int> period_;
};

}  // namespace lamcf
