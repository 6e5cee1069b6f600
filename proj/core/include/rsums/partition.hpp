// Unrestricted partition numbers P(n) and the Euler function
// Q(x) = prod_{j>=1} (1 - x^j).

#pragma once

#include <gmpxx.h>

#include "rsums/value.hpp"

namespace rsums {

// P(n) by the pentagonal-number recurrence, memoized.  Thread safety: the
// cache is guarded internally; call partition_reserve() up front to
// pre-populate before parallel phases.
const mpz_class& partition(unsigned n);
void partition_reserve(unsigned n_max);

// Q(x) for rational 0 <= x < 1, truncated when the pentagonal terms drop
// below 2^-bits; the series has quadratically growing exponents so a handful
// of terms suffice.
Value euler_q(const Value& x, unsigned bits = 128);

}  // namespace rsums
