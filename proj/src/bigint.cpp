#include "lamcf/bigint.hpp"

#include <cmath>
#include <cstdint>

#include "lamcf/error.hpp"

namespace lamcf {

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::NegativeInput, "isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

int sign(const Int& a) { return sgn(a); }

std::string to_string(const Int& a) { return a.get_str(10); }

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::ParseError, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::ParseError, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

long double to_long_double(const Int& a) {
  if (a == 0) return 0.0L;
  Int m = abs(a);
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  long shift = 0;
  if (bits > 64) {
    shift = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  }
  // m now fits in 64 bits; export it limb-size independently.
  std::uint64_t word = 0;
  mpz_export(&word, nullptr, -1, sizeof(word), 0, 0, m.get_mpz_t());
  long double v = std::ldexp(static_cast<long double>(word), static_cast<int>(shift));
  return a < 0 ? -v : v;
}

double log_abs(const Int& a) {
  if (a == 0) throw Error(ErrorCode::NegativeInput, "log of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, a.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace lamcf
