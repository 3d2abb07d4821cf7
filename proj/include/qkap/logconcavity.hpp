#pragma once

#include "qkap/intpoly.hpp"

namespace qkap {

// gaussian(M, m) gaussian(N, l) - gaussian(M, m-1) gaussian(N, l+1).
// Out-of-range m, l fall back to the zero convention of gaussian, so the
// boundary cases need no special-casing; only negative M, N are rejected.
// Nonnegativity is guaranteed on 1 <= m <= l < N with M-m >= N-l >= 1.
IntPoly d_poly(int M, int N, int m, int l);  // InvalidSpecError

// Shifted variant: the subtracted product picks up a factor q^r. Computes
// the formula for any r >= 0; the nonnegativity window is
// 0 <= r <= M - N + 2l - 2m + 2.
IntPoly d_poly_shifted(int M, int N, int m, int l, int r);  // InvalidSpecError

// kaplansky(n,m) kaplansky(n,l) - q^r kaplansky(n,m-1) kaplansky(n,l+1).
// Requires 1 <= m <= l < n and r >= 0; nonnegativity is guaranteed for
// r <= 2l - 2m + 2 and can fail beyond that window.
IntPoly kaplansky_diff(int n, int m, int l, int r);  // InvalidSpecError

// Checks the two exact identities behind the difference expansion, for
// 1 <= m <= l < n and 0 <= r <= 2l - 2m + 2:
//  (a) kaplansky_diff splits into four shifted d_poly terms with prefactors
//      1, q^n, q^n, q^{2n};
//  (b) at the top of the window the two boundary terms merge, trading the
//      q^n prefactor for q^m and dropping the shift by one.
// Returns true iff both hold exactly.
bool verify_decomposition(int n, int m, int l, int r);  // InvalidSpecError

}  // namespace qkap
