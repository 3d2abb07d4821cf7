#include "qkap/logconcavity.hpp"

#include "qkap/qseries.hpp"

namespace qkap {

IntPoly d_poly(int M, int N, int m, int l) { return d_poly_shifted(M, N, m, l, 0); }

IntPoly d_poly_shifted(int M, int N, int m, int l, int r) {
    if (M < 0 || N < 0) throw InvalidSpecError("d_poly: M and N must be nonnegative");
    if (r < 0) throw InvalidSpecError("d_poly: shift must be nonnegative");
    return gaussian(M, m) * gaussian(N, l) -
           shift(gaussian(M, m - 1) * gaussian(N, l + 1), static_cast<std::size_t>(r));
}

IntPoly kaplansky_diff(int n, int m, int l, int r) {
    if (!(1 <= m && m <= l && l < n)) {
        throw InvalidSpecError("kaplansky_diff: requires 1 <= m <= l < n");
    }
    if (r < 0) throw InvalidSpecError("kaplansky_diff: shift must be nonnegative");
    return kaplansky(n, m) * kaplansky(n, l) -
           shift(kaplansky(n, m - 1) * kaplansky(n, l + 1), static_cast<std::size_t>(r));
}

bool verify_decomposition(int n, int m, int l, int r) {
    if (!(1 <= m && m <= l && l < n)) {
        throw InvalidSpecError("verify_decomposition: requires 1 <= m <= l < n");
    }
    if (r < 0 || r > 2 * l - 2 * m + 2) {
        throw InvalidSpecError("verify_decomposition: requires 0 <= r <= 2l - 2m + 2");
    }
    const auto sn = static_cast<std::size_t>(n);

    // (a) the four-term split of the shifted difference
    IntPoly split = d_poly_shifted(n, n, m, l, r) +
                    shift(d_poly_shifted(n - 1, n, m - 1, l, r), sn) +
                    shift(d_poly_shifted(n, n - 1, m, l - 1, r), sn) +
                    shift(d_poly_shifted(n - 1, n - 1, m - 1, l - 1, r), 2 * sn);
    if (split != kaplansky_diff(n, m, l, r)) return false;

    // (b) the boundary-term merge at the top of the window
    const int top = 2 * l - 2 * m + 2;
    IntPoly lhs = shift(d_poly_shifted(n - 1, n - 1, m - 1, l - 1, top), sn) +
                  d_poly_shifted(n, n - 1, m, l - 1, top);
    IntPoly rhs = d_poly_shifted(n - 1, n - 1, m - 1, l - 1, top) +
                  shift(d_poly_shifted(n, n - 1, m, l - 1, top - 1),
                        static_cast<std::size_t>(m));
    return lhs == rhs;
}

}  // namespace qkap
