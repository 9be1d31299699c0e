#include "lamcf/legendre.hpp"

#include <cmath>

#include "lamcf/cf.hpp"
#include "lamcf/gl2.hpp"

namespace lamcf {
namespace {

double reflection_length(const Int& trace) {
  // Glide reflections: |tr| = 2 sinh(l/2).
  Int t = abs(trace);
  if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 52) return 2.0 * std::asinh(t.get_d() / 2.0);
  return 2.0 * log_abs(t);
}

}  // namespace

TermSequence::TermSequence(std::vector<Int> terms) : terms_(std::move(terms)) {
  // Reuse the fraction factory for the positivity rules.
  (void)RegularCF::prefix_only(terms_);
}

TermSequence TermSequence::extended(Int next) const {
  std::vector<Int> terms = terms_;
  terms.push_back(std::move(next));
  return TermSequence(std::move(terms));
}

TracePredicate hyperbolic_predicate() {
  return {"hyperbolic", [](const Int& t) { return abs(t) > 2; }};
}

TracePredicate parse_predicate(std::string_view spec) {
  if (spec == "hyperbolic") return hyperbolic_predicate();
  if (spec == "never") return {"never", [](const Int&) { return false; }};
  if (spec == "prime") {
    return {"prime", [](const Int& t) {
              Int m = abs(t);
              return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
            }};
  }
  if (spec.starts_with("mod:")) {
    std::string_view rest = spec.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::UnknownPredicate, "expected mod:M:R, got " + std::string(spec));
    }
    Int modulus;
    Int residue;
    try {
      modulus = parse_int(rest.substr(0, colon));
      residue = parse_int(rest.substr(colon + 1));
    } catch (const Error&) {
      throw Error(ErrorCode::UnknownPredicate, "expected mod:M:R, got " + std::string(spec));
    }
    if (modulus < 1) throw Error(ErrorCode::UnknownPredicate, "modulus must be >= 1");
    Int r = residue % modulus;
    if (r < 0) r += modulus;
    return {std::string(spec), [modulus, r](const Int& t) {
              Int x = t % modulus;
              if (x < 0) x += modulus;
              return x == r;
            }};
  }
  throw Error(ErrorCode::UnknownPredicate, "unknown trace predicate '" + std::string(spec) + "'");
}

IntMat2 build_gamma(const TermSequence& p, std::size_t k) {
  return cf_to_matrix(p.as_prefix(), k);
}

Int trace_formula(const TermSequence& p, std::size_t k) {
  if (k > 3) {
    throw Error(ErrorCode::UnsupportedIndex, "closed trace form only known for k <= 3");
  }
  if (k >= p.size()) {
    throw Error(ErrorCode::DepthExceeded, "trace index " + std::to_string(k) + " needs " +
                                              std::to_string(k + 1) + " terms");
  }
  switch (k) {
    case 0: return 2;
    case 1: return p[0] + p[1];
    case 2: return 2 + p[0] * p[1] + p[1] * p[2];
    default: return p[0] + p[1] + p[2] + p[3] + p[0] * p[1] * p[2] + p[1] * p[2] * p[3];
  }
}

AffineTrace trace_affine_coefficients(const TermSequence& p, std::size_t n) {
  // gamma_n (0 1; 1 x) = (B, A + B x; D, C + D x).
  IntMat2 g = build_gamma(p, n);
  return AffineTrace{g.d(), g.b() + g.c()};
}

TermSequence select_next_term(const TermSequence& p, const TracePredicate& pred,
                              std::uint64_t search_bound) {
  const AffineTrace affine = trace_affine_coefficients(p, p.size() - 1);
  for (std::uint64_t x = 1; x <= search_bound; ++x) {
    Int t = affine.a * Int(static_cast<unsigned long>(x)) + affine.b;
    if (t > 2 && pred.test(t)) return p.extended(Int(static_cast<unsigned long>(x)));
  }
  throw Error(ErrorCode::NoAdmissibleTerm, "no term in [1, " + std::to_string(search_bound) +
                                               "] satisfies '" + pred.name + "'");
}

LegendreRun legendre_stream(const StreamConfig& config) {
  LegendreRun run{TermSequence({config.p0}), {}, std::nullopt};
  for (std::size_t step = 0; step < config.steps; ++step) {
    try {
      run.terms = select_next_term(run.terms, config.pred, config.search_bound);
    } catch (const Error& e) {
      run.error = e;
      return run;
    }
    const std::size_t k = run.terms.size() - 1;
    IntMat2 gamma = build_gamma(run.terms, k);
    Int trace = gamma.trace();
    const bool even = k % 2 == 0;
    const double length = gamma.det() == 1 ? geodesic_length(trace) : reflection_length(trace);
    run.steps.push_back(LegendreStep{k, run.terms[k], gamma, trace, in_hecke(gamma, config.level),
                                     even, length});
  }
  return run;
}

}  // namespace lamcf
