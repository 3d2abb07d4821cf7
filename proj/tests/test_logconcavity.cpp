#include "qkap/logconcavity.hpp"

#include "doctest.h"
#include "qkap/errors.hpp"
#include "qkap/qseries.hpp"

using namespace qkap;

// ---- reference machinery ----------------------------------------------------
//
// Both difference polynomials recomputed directly from their defining
// formulas using the q-series module, which carries its own independent
// oracle. The tests here pin the hand-worked small cases and the exact
// boundary of the nonnegativity window.

namespace {

IntPoly ref_d_poly(int M, int N, int m, int l) {
    return gaussian(M, m) * gaussian(N, l) - gaussian(M, m - 1) * gaussian(N, l + 1);
}

IntPoly ref_kaplansky_diff(int n, int m, int l, int r) {
    IntPoly sub = kaplansky(n, m - 1) * kaplansky(n, l + 1);
    return kaplansky(n, m) * kaplansky(n, l) - shift(sub, static_cast<std::size_t>(r));
}

}  // namespace

TEST_CASE("d_poly: hand-worked values") {
    // (1+q)^2 - 1 = 2q + q^2
    CHECK(d_poly(2, 2, 1, 1) == IntPoly({0, 2, 1}));
    // boundary indices use the zero convention, no special-casing
    CHECK(d_poly(2, 2, 0, 1) == gaussian(2, 0) * gaussian(2, 1));  // m-1 < 0 drops
    CHECK(d_poly(3, 2, 1, 2) == gaussian(3, 1));  // l+1 > N drops
    CHECK_THROWS_AS((void)d_poly(-1, 2, 1, 1), InvalidSpecError);
    CHECK_THROWS_AS((void)d_poly(2, -1, 1, 1), InvalidSpecError);
}

TEST_CASE("d_poly_shifted: hand-worked values and window edge") {
    CHECK(d_poly_shifted(2, 2, 1, 1, 0) == d_poly(2, 2, 1, 1));
    // (1+q)^2 - q^2 = 1 + 2q
    CHECK(d_poly_shifted(2, 2, 1, 1, 2) == IntPoly({1, 2}));
    // one past the window: 1 + 2q + q^2 - q^3
    CHECK(d_poly_shifted(2, 2, 1, 1, 3) == IntPoly({1, 2, 1, -1}));
    CHECK(d_poly_shifted(2, 2, 1, 1, 3).coeff(3) == -1);
    CHECK_THROWS_AS((void)d_poly_shifted(2, 2, 1, 1, -1), InvalidSpecError);
    CHECK_THROWS_AS((void)d_poly_shifted(-2, 2, 1, 1, 0), InvalidSpecError);
}

TEST_CASE("difference polynomials match their defining formulas") {
    for (int N = 2; N <= 8; ++N)
        for (int l = 1; l < N; ++l)
            for (int m = 1; m <= l; ++m)
                for (int M = m + (N - l); M <= 8; ++M) {
                    CAPTURE(M);
                    CAPTURE(N);
                    CAPTURE(m);
                    CAPTURE(l);
                    CHECK(d_poly(M, N, m, l) == ref_d_poly(M, N, m, l));
                    const int rmax = M - N + 2 * l - 2 * m + 2;
                    for (int r = 0; r <= rmax + 1; ++r) {
                        IntPoly got = d_poly_shifted(M, N, m, l, r);
                        IntPoly want = gaussian(M, m) * gaussian(N, l) -
                                       shift(gaussian(M, m - 1) * gaussian(N, l + 1),
                                             static_cast<std::size_t>(r));
                        CHECK(got == want);
                        if (r <= rmax) CHECK(is_nonnegative(got));
                    }
                }
}

TEST_CASE("kaplansky_diff: hand-worked values") {
    // (1+q+q^2)^2 - q^2 (1)(1+q^2) = 1 + 2q + 2q^2 + 2q^3
    CHECK(kaplansky_diff(2, 1, 1, 2) == IntPoly({1, 2, 2, 2}));
    // one past the window the top term of the subtracted product survives
    IntPoly past = kaplansky_diff(2, 1, 1, 3);
    CHECK(past.coeff(5) == -1);
    CHECK(first_negative_index(past) == 5);
    CHECK_THROWS_AS((void)kaplansky_diff(2, 1, 1, -1), InvalidSpecError);
    CHECK_THROWS_AS((void)kaplansky_diff(2, 0, 1, 0), InvalidSpecError);
    CHECK_THROWS_AS((void)kaplansky_diff(2, 1, 2, 0), InvalidSpecError);  // l < n fails
    CHECK_THROWS_AS((void)kaplansky_diff(3, 2, 1, 0), InvalidSpecError);  // m > l
}

TEST_CASE("kaplansky_diff matches its defining formula and stays nonnegative") {
    for (int n = 2; n <= 8; ++n)
        for (int l = 1; l < n; ++l)
            for (int m = 1; m <= l; ++m) {
                const int rmax = 2 * l - 2 * m + 2;
                for (int r = 0; r <= rmax + 1; ++r) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(l);
                    CAPTURE(r);
                    IntPoly got = kaplansky_diff(n, m, l, r);
                    CHECK(got == ref_kaplansky_diff(n, m, l, r));
                    if (r <= rmax) CHECK(is_nonnegative(got));
                }
            }
}

TEST_CASE("one step past the window every difference goes negative") {
    // the subtracted product is monic of degree one above the minuend there
    for (int n = 2; n <= 8; ++n)
        for (int l = 1; l < n; ++l)
            for (int m = 1; m <= l; ++m) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(l);
                IntPoly past = kaplansky_diff(n, m, l, 2 * l - 2 * m + 3);
                CHECK(first_negative_index(past).has_value());
                const std::size_t top =
                    static_cast<std::size_t>(m * (n - m) + m + l * (n - l) + l);
                CHECK(past.coeff(top + 1) == -1);
            }
}

TEST_CASE("verify_decomposition: hand-worked specs and full window sweep") {
    CHECK(verify_decomposition(2, 1, 1, 0));
    CHECK(verify_decomposition(4, 1, 2, 3));
    CHECK(verify_decomposition(5, 2, 3, 4));
    CHECK_THROWS_AS((void)verify_decomposition(2, 1, 1, -1), InvalidSpecError);
    CHECK_THROWS_AS((void)verify_decomposition(2, 1, 1, 3), InvalidSpecError);  // past window
    CHECK_THROWS_AS((void)verify_decomposition(2, 0, 1, 0), InvalidSpecError);
    for (int n = 2; n <= 8; ++n)
        for (int l = 1; l < n; ++l)
            for (int m = 1; m <= l; ++m)
                for (int r = 0; r <= 2 * l - 2 * m + 2; ++r) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(l);
                    CAPTURE(r);
                    CHECK(verify_decomposition(n, m, l, r));
                }
}
