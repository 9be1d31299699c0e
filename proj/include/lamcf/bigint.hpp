#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lamcf {

/// Arbitrary-precision signed integer used for every exact quantity.
using Int = mpz_class;

Int isqrt(const Int& n);  // floor(sqrt(n)), n >= 0
bool is_square(const Int& n);

/// Floor division; b != 0.
Int floor_div(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
int sign(const Int& a);

std::string to_string(const Int& a);
Int parse_int(std::string_view text);

/// Nearest long double (top 64 bits of the magnitude kept).
long double to_long_double(const Int& a);

/// log|a| in double precision, valid for any magnitude; a != 0.
double log_abs(const Int& a);

}  // namespace lamcf
