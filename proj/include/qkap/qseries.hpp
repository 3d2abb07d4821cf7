#pragma once

#include "qkap/intpoly.hpp"

namespace qkap {

// Gaussian binomial coefficient of n over m, built by the additive
// recurrence (n,m) = (n-1,m-1) + q^m (n-1,m) with memoization. m outside
// [0, n] gives the zero polynomial; n must be nonnegative.
IntPoly gaussian(int n, int m);

// Same values through an independent route: sums q^|lambda| over the
// partitions lambda inside an m x (n-m) box. Exponential in spirit, meant
// for cross-checks at desk scale. Requires 0 <= m <= n.
IntPoly gaussian_oracle(int n, int m);

// q-analogue of the Kaplansky numbers, built additively as
// q^m gaussian(n, m) + gaussian(n-1, m-1). Requires n >= 1 and 0 <= m <= n.
IntPoly kaplansky(int n, int m);

// Same values through the defining rational form:
// gaussian(n, m) (1 - q^{n+m}) / (1 - q^n), divided exactly.
IntPoly kaplansky_by_division(int n, int m);

// gaussian(n+m, m) - q^n gaussian(n+m-2, m-2). Requires n, m >= 0.
IntPoly reiner_stanton(int n, int m);

// q-Catalan polynomial (1 - q) gaussian(2n, n) / (1 - q^{n+1}), divided
// exactly. Requires n >= 0.
IntPoly q_catalan(int n);

}  // namespace qkap
