#pragma once

#include <gmpxx.h>

#include <string>

namespace trilie {

/// Exact rational scalar. GMP keeps numerator/denominator canonical.
using Rat = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// 1/k!
Rat inverse_factorial(unsigned k);

/// r^k for a possibly negative integer exponent; r must be nonzero when k < 0.
Rat rat_pow(const Rat& r, long k);

}  // namespace trilie
