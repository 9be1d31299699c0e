#include "lamcf/regular_cf.hpp"

#include <cctype>

#include "lamcf/error.hpp"

namespace lamcf {
namespace {

void check_terms(const std::vector<Int>& terms, bool first_is_p0) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Int floor_value = (first_is_p0 && i == 0) ? 0 : 1;
    if (terms[i] < floor_value) {
      throw Error(ErrorCode::InvalidTerm, "term " + std::to_string(i) + " = " +
                                              lamcf::to_string(terms[i]) + " must be >= " +
                                              lamcf::to_string(floor_value));
    }
  }
}

std::string join(const std::vector<Int>& terms, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < terms.size(); ++i) {
    if (i > from) out += ", ";
    out += lamcf::to_string(terms[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Int> parse_list(std::string_view s) {
  std::vector<Int> out;
  s = trim(s);
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_int(trim(s.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(CfKind kind) {
  switch (kind) {
    case CfKind::Finite: return "finite";
    case CfKind::EventuallyPeriodic: return "periodic";
    case CfKind::PrefixOnly: return "prefix";
  }
  return "?";
}

RegularCF::RegularCF(CfKind kind, std::vector<Int> prefix, std::vector<Int> period)
    : kind_(kind), prefix_(std::move(prefix)), period_(std::move(period)) {}

RegularCF RegularCF::finite(std::vector<Int> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidTerm, "finite fraction needs at least one term");
  check_terms(terms, true);
  return RegularCF(CfKind::Finite, std::move(terms), {});
}

RegularCF RegularCF::periodic(std::vector<Int> prefix, std::vector<Int> period) {
  if (period.empty()) throw Error(ErrorCode::InvalidTerm, "period must be nonempty");
  check_terms(prefix, true);
  check_terms(period, false);
  return RegularCF(CfKind::EventuallyPeriodic, std::move(prefix), std::move(period));
}

RegularCF RegularCF::prefix_only(std::vector<Int> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidTerm, "prefix needs at least one term");
  check_terms(terms, true);
  return RegularCF(CfKind::PrefixOnly, std::move(terms), {});
}

std::optional<std::size_t> RegularCF::known_terms() const {
  if (kind_ == CfKind::EventuallyPeriodic) return std::nullopt;
  return prefix_.size();
}

bool RegularCF::has_term(std::size_t i) const {
  return kind_ == CfKind::EventuallyPeriodic || i < prefix_.size();
}

const Int& RegularCF::term(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (kind_ != CfKind::EventuallyPeriodic) {
    throw Error(ErrorCode::DepthExceeded, "term " + std::to_string(i) + " requested but only " +
                                              std::to_string(prefix_.size()) + " known");
  }
  return period_[(i - prefix_.size()) % period_.size()];
}

std::string RegularCF::to_string() const {
  // The first term goes before ';'. For a purely periodic fraction the
  // period itself starts at p0 and is written "[(a, b)]".
  if (kind_ == CfKind::EventuallyPeriodic && prefix_.empty()) {
    return "[(" + join(period_, 0) + ")]";
  }
  std::string out = "[" + lamcf::to_string(prefix_[0]);
  std::string rest = join(prefix_, 1);
  std::string tail;
  if (kind_ == CfKind::EventuallyPeriodic) tail = "(" + join(period_, 0) + ")";
  if (kind_ == CfKind::PrefixOnly) tail = "...";
  if (!rest.empty() || !tail.empty()) {
    out += "; " + rest;
    if (!rest.empty() && !tail.empty()) out += ", ";
    out += tail;
  }
  return out + "]";
}

RegularCF RegularCF::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorCode::ParseError, "continued fraction must look like [p0; p1, ...]");
  }
  s = trim(s.substr(1, s.size() - 2));
  std::string flat(s);
  for (char& ch : flat) {
    if (ch == ';') ch = ',';
  }
  std::string_view body = trim(flat);

  if (auto open = body.find('('); open != std::string_view::npos) {
    auto close = body.find(')');
    if (close == std::string_view::npos || trim(body.substr(close + 1)) != "") {
      throw Error(ErrorCode::ParseError, "period must close the fraction: " + std::string(text));
    }
    std::string_view head = trim(body.substr(0, open));
    if (!head.empty() && head.back() == ',') head.remove_suffix(1);
    return periodic(parse_list(head), parse_list(body.substr(open + 1, close - open - 1)));
  }
  if (body.size() >= 3 && body.substr(body.size() - 3) == "...") {
    std::string_view head = trim(body.substr(0, body.size() - 3));
    if (!head.empty() && head.back() == ',') head.remove_suffix(1);
    return prefix_only(parse_list(head));
  }
  return finite(parse_list(body));
}

}  // namespace lamcf
