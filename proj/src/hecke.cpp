#include "lamcf/hecke.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lamcf/error.hpp"

namespace lamcf {
namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

// Kronecker symbols (-4|p) and (-3|p) for a prime p.
int chi_minus4(std::int64_t p) {
  if (p == 2) return 0;
  return p % 4 == 1 ? 1 : -1;
}

int chi_minus3(std::int64_t p) {
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

}  // namespace

SurfaceInvariants surface_invariants(std::int64_t level) {
  if (level < 1) throw Error(ErrorCode::InvalidLevel, "level " + std::to_string(level) + " < 1");
  const auto primes = factorize(level);

  std::int64_t index = level;
  for (auto [p, e] : primes) index = index / p * (p + 1);

  std::int64_t cusps = 0;
  for (std::int64_t d = 1; d * d <= level; ++d) {
    if (level % d != 0) continue;
    cusps += totient(std::gcd(d, level / d));
    if (d * d != level) cusps += totient(std::gcd(level / d, d));
  }

  std::int64_t e2 = 0;
  if (level % 4 != 0) {
    e2 = 1;
    for (auto [p, e] : primes) e2 *= 1 + chi_minus4(p);
  }
  std::int64_t e3 = 0;
  if (level % 9 != 0) {
    e3 = 1;
    for (auto [p, e] : primes) e3 *= 1 + chi_minus3(p);
  }

  const std::int64_t twelve_g = 12 + index - 3 * e2 - 4 * e3 - 6 * cusps;
  if (twelve_g % 12 != 0 || twelve_g < 0) {
    throw Error(ErrorCode::InvalidLevel,
                "genus formula is not integral at N = " + std::to_string(level));
  }
  return SurfaceInvariants{level, index, cusps, e2, e3, twelve_g / 12};
}

std::int64_t index_bruteforce(std::int64_t level) {
  if (level < 1) throw Error(ErrorCode::InvalidLevel, "level " + std::to_string(level) + " < 1");
  if (level > kMaxBruteforceLevel) {
    throw Error(ErrorCode::LevelTooLarge, "brute-force index is bounded by N <= 10^4");
  }
  const std::int64_t n = level;
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u <= n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u % n);
  }
  std::vector<bool> visited(static_cast<std::size_t>(n * n), false);
  std::int64_t orbits = 0;
  for (std::int64_t c = 0; c < n; ++c) {
    const std::int64_t gc = std::gcd(c, n);
    for (std::int64_t d = 0; d < n; ++d) {
      if (visited[static_cast<std::size_t>(c * n + d)]) continue;
      if (std::gcd(gc, d) != 1) continue;
      ++orbits;
      for (std::int64_t u : units) {
        visited[static_cast<std::size_t>((u * c % n) * n + u * d % n)] = true;
      }
    }
  }
  return orbits;
}

}  // namespace lamcf
