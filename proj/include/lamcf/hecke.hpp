#pragma once

#include <cstdint>

namespace lamcf {

/// Arithmetic data of the modular curve X0(N).
struct SurfaceInvariants {
  std::int64_t level;
  std::int64_t index;      // [SL(2,Z) : Gamma0(N)]
  std::int64_t cusps;
  std::int64_t elliptic2;  // order-2 elliptic points
  std::int64_t elliptic3;  // order-3 elliptic points
  std::int64_t genus;
};

/// Closed-form invariants from the prime factorization of N:
///   index = N prod_{p|N} (1 + 1/p)
///   cusps = sum_{d|N} phi(gcd(d, N/d))
///   e2 = 0 if 4|N else prod (1 + (-1|p)),  e3 = 0 if 9|N else prod (1 + (-3|p))
///   12 (g - 1) = index - 3 e2 - 4 e3 - 6 cusps
/// Throws InvalidLevel for N < 1.
SurfaceInvariants surface_invariants(std::int64_t level);

/// Size of P^1(Z/N), counted by walking unit orbits of primitive pairs
/// (c, d) mod N. Independent of the closed form above. N <= 10^4.
std::int64_t index_bruteforce(std::int64_t level);

inline constexpr std::int64_t kMaxBruteforceLevel = 10'000;

}  // namespace lamcf
