#include "lamcf/cf.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lamcf/error.hpp"

namespace lamcf {
namespace {

// Starts at (h_{-2}, h_{-1}) = (0, 1) and (k_{-2}, k_{-1}) = (1, 0).
struct Convergent {
  Int h_prev = 0, h = 1;
  Int k_prev = 1, k = 0;

  void push(const Int& term) {
    Int h_next = term * h + h_prev;
    Int k_next = term * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
};

Convergent convergent_at(const RegularCF& cf, std::size_t depth) {
  Convergent c;
  for (std::size_t i = 0; i <= depth; ++i) c.push(cf.term(i));
  return c;
}

std::size_t clamp_depth(const RegularCF& cf, std::size_t depth) {
  switch (cf.kind()) {
    case CfKind::Finite:
      return std::min(depth, cf.prefix().size() - 1);
    case CfKind::PrefixOnly:
      if (depth == kAllTerms) return cf.prefix().size() - 1;
      if (depth >= cf.prefix().size()) {
        throw Error(ErrorCode::DepthExceeded, "depth " + std::to_string(depth) + " but only " +
                                                  std::to_string(cf.prefix().size()) +
                                                  " terms known");
      }
      return depth;
    case CfKind::EventuallyPeriodic:
      if (depth == kAllTerms) {
        throw Error(ErrorCode::DepthExceeded, "a periodic fraction has no last convergent");
      }
      return depth;
  }
  return depth;
}

std::vector<Int> primitive_root(const std::vector<Int>& word) {
  const std::size_t n = word.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = word[i] == word[i - len];
    if (repeats) return std::vector<Int>(word.begin(), word.begin() + static_cast<long>(len));
  }
  return word;
}

bool is_primitive(const std::vector<Int>& word) { return primitive_root(word).size() == word.size(); }

bool is_rotation(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = x[(i + shift) % n] == y[i];
    if (same) return true;
  }
  return false;
}

// Longest run of trailing terms of `terms` consistent with the infinite
// periodic word, over all phases.
std::size_t periodic_suffix_run(const std::vector<Int>& terms, const std::vector<Int>& period) {
  const std::size_t n = period.size();
  std::size_t best = 0;
  for (std::size_t phase = 0; phase < n; ++phase) {
    // terms.back() is aligned with period[phase].
    std::size_t run = 0;
    std::size_t pos = phase;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (*it != period[pos]) break;
      ++run;
      pos = (pos + n - 1) % n;
    }
    best = std::max(best, run);
  }
  return best;
}

// Longest agreeing run that ends where the shorter aligned overlap ends.
std::size_t aligned_suffix_run(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::size_t best = 0;
  const long nx = static_cast<long>(x.size());
  const long ny = static_cast<long>(y.size());
  // offset = index in x minus index in y.
  for (long offset = -(ny - 1); offset <= nx - 1; ++offset) {
    long end_x = std::min(nx, ny + offset);  // exclusive, in x coordinates
    long start_x = std::max(0L, offset);
    std::size_t run = 0;
    for (long ix = end_x - 1; ix >= start_x; --ix) {
      if (x[static_cast<std::size_t>(ix)] != y[static_cast<std::size_t>(ix - offset)]) break;
      ++run;
    }
    best = std::max(best, run);
  }
  return best;
}

IntMat2 shift_matrix_product(const std::vector<Int>& terms) {
  // Product of (t 1; 1 0); maps the complete quotient after `terms` to the value.
  Int a = 1, b = 0, c = 0, d = 1;
  for (const Int& t : terms) {
    Int na = a * t + b;
    Int nc = c * t + d;
    b = a;
    d = c;
    a = std::move(na);
    c = std::move(nc);
  }
  return IntMat2(a, b, c, d);
}

}  // namespace

std::string_view to_string(TailDecision d) {
  switch (d) {
    case TailDecision::Equivalent: return "Equivalent";
    case TailDecision::NotEquivalent: return "NotEquivalent";
    case TailDecision::Unknown: return "Unknown";
  }
  return "?";
}

RegularCF expand_rational(const Rational& x) {
  if (x.sign() < 0) throw Error(ErrorCode::NegativeInput, "cannot expand negative " + x.to_string());
  std::vector<Int> terms;
  Int num = x.num();
  Int den = x.den();
  while (den != 0) {
    Int q = floor_div(num, den);
    Int rem = num - q * den;
    terms.push_back(std::move(q));
    num = std::move(den);
    den = std::move(rem);
  }
  return RegularCF::finite(std::move(terms));
}

Rational eval_cf(const RegularCF& cf, std::size_t depth) {
  Convergent c = convergent_at(cf, clamp_depth(cf, depth));
  return Rational(c.h, c.k);
}

IntMat2 cf_to_matrix(const RegularCF& cf, std::size_t depth) {
  if (!cf.has_term(depth)) {
    throw Error(ErrorCode::DepthExceeded, "matrix depth " + std::to_string(depth) +
                                              " exceeds available terms");
  }
  Convergent c = convergent_at(cf, depth);
  return IntMat2(c.h_prev, c.h, c.k_prev, c.k);
}

RegularCF canonicalize(const RegularCF& cf) {
  switch (cf.kind()) {
    case CfKind::Finite: {
      std::vector<Int> terms = cf.prefix();
      if (terms.size() > 1 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
      }
      return RegularCF::finite(std::move(terms));
    }
    case CfKind::EventuallyPeriodic: {
      std::vector<Int> prefix = cf.prefix();
      std::vector<Int> period = primitive_root(cf.period());
      while (!prefix.empty() && prefix.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        prefix.pop_back();
      }
      return RegularCF::periodic(std::move(prefix), std::move(period));
    }
    case CfKind::PrefixOnly:
      return cf;
  }
  return cf;
}

bool is_canonical(const RegularCF& cf) {
  switch (cf.kind()) {
    case CfKind::Finite:
      return cf.prefix().size() == 1 || cf.prefix().back() >= 2;
    case CfKind::EventuallyPeriodic:
      return is_primitive(cf.period()) &&
             (cf.prefix().empty() || cf.prefix().back() != cf.period().back());
    case CfKind::PrefixOnly:
      return true;
  }
  return false;
}

RegularCF expand_surd(const QuadSurd& x, std::size_t max_terms) {
  if (x.sign() < 0) throw Error(ErrorCode::NegativeInput, "cannot expand negative " + x.to_string());

  // Rewrite x as (P + sqrt(d))/Q with Q | d - P^2.
  Int d = x.q() * x.q() * x.D();
  Int P = x.q() > 0 ? x.p() : Int(-x.p());
  Int Q = x.q() > 0 ? x.r() : Int(-x.r());
  if ((d - P * P) % Q != 0) {
    Int scale = abs(Q);
    P *= scale;
    d *= scale * scale;
    Q *= scale;
  }
  const Int root = isqrt(d);

  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> terms;
  while (terms.size() < max_terms) {
    auto [it, inserted] = seen.try_emplace({P, Q}, terms.size());
    if (!inserted) {
      const auto start = static_cast<long>(it->second);
      std::vector<Int> prefix(terms.begin(), terms.begin() + start);
      std::vector<Int> period(terms.begin() + start, terms.end());
      return canonicalize(RegularCF::periodic(std::move(prefix), std::move(period)));
    }
    Int a = Q > 0 ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
    P = a * Q - P;
    Q = (d - P * P) / Q;
    terms.push_back(std::move(a));
  }
  throw Error(ErrorCode::PeriodNotFound,
              "no period within " + std::to_string(max_terms) + " terms for " + x.to_string());
}

QuadNumber value_of(const RegularCF& cf) {
  switch (cf.kind()) {
    case CfKind::Finite:
      return eval_cf(cf);
    case CfKind::EventuallyPeriodic: {
      // Purely periodic part y = M(y) with M = prod (t 1; 1 0) over the period;
      // y > 1 is the positive root of c*y^2 + (d - a)*y - b = 0.
      IntMat2 m = shift_matrix_product(cf.period());
      QuadSurd y = std::get<QuadSurd>(quadratic_root(m.c(), m.d() - m.a(), -m.b(), 1));
      if (cf.prefix().empty()) return y;
      IntMat2 head = shift_matrix_product(cf.prefix());
      return y.linear_fractional(head.a(), head.b(), head.c(), head.d());
    }
    case CfKind::PrefixOnly:
      break;
  }
  throw Error(ErrorCode::UnsupportedKind, "a prefix-only fraction has no exact value");
}

TailDecision tail_equivalent(const RegularCF& a, const RegularCF& b,
                             const TailWitnessPolicy& policy) {
  const bool a_finite = a.kind() == CfKind::Finite;
  const bool b_finite = b.kind() == CfKind::Finite;
  if (a_finite && b_finite) return TailDecision::Equivalent;
  if (a_finite != b_finite) return TailDecision::NotEquivalent;
  // Identical data describe the same point, however short the prefix.
  if (a == b) return TailDecision::Equivalent;

  if (a.kind() == CfKind::EventuallyPeriodic && b.kind() == CfKind::EventuallyPeriodic) {
    const RegularCF ca = canonicalize(a);
    const RegularCF cb = canonicalize(b);
    return is_rotation(ca.period(), cb.period()) ? TailDecision::Equivalent
                                                 : TailDecision::NotEquivalent;
  }

  if (a.kind() == CfKind::PrefixOnly && b.kind() == CfKind::PrefixOnly) {
    return aligned_suffix_run(a.prefix(), b.prefix()) >= policy.min_overlap
               ? TailDecision::Equivalent
               : TailDecision::Unknown;
  }

  const RegularCF& stream = a.kind() == CfKind::PrefixOnly ? a : b;
  const RegularCF periodic = canonicalize(a.kind() == CfKind::PrefixOnly ? b : a);
  const std::size_t needed = std::max(policy.min_overlap, periodic.period().size());
  return periodic_suffix_run(stream.prefix(), periodic.period()) >= needed
             ? TailDecision::Equivalent
             : TailDecision::Unknown;
}

RegularCF apply_gl2(const IntMat2& m, const RegularCF& cf) {
  switch (cf.kind()) {
    case CfKind::Finite: {
      Rational x = eval_cf(cf);
      Rational den = Rational(m.c()) * x + Rational(m.d());
      if (den.sign() == 0) {
        throw Error(ErrorCode::ImageNotPositive, "image of " + x.to_string() + " is infinity");
      }
      Rational image = (Rational(m.a()) * x + Rational(m.b())) / den;
      if (image.sign() <= 0) {
        throw Error(ErrorCode::ImageNotPositive, "image " + image.to_string() + " is not positive");
      }
      return expand_rational(image);
    }
    case CfKind::EventuallyPeriodic: {
      QuadSurd x = std::get<QuadSurd>(value_of(cf));
      QuadSurd image = x.linear_fractional(m.a(), m.b(), m.c(), m.d());
      if (image.sign() <= 0) {
        throw Error(ErrorCode::ImageNotPositive, "image " + image.to_string() + " is not positive");
      }
      return expand_surd(image);
    }
    case CfKind::PrefixOnly:
      break;
  }
  throw Error(ErrorCode::UnsupportedKind, "cannot act on a prefix-only fraction");
}

}  // namespace lamcf
