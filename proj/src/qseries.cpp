#include "qkap/qseries.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qkap/partitions.hpp"

namespace qkap {

namespace {

// Memo table for the recurrence, shared process-wide. One lock around each
// top-level call keeps every cell computed exactly once under concurrent
// use; the recursion below runs entirely inside the lock.
std::mutex g_gaussian_mutex;
std::map<std::pair<int, int>, IntPoly> g_gaussian_table;

const IntPoly& gaussian_locked(int n, int m) {
    static const IntPoly kOne = IntPoly::one();
    static const IntPoly kZero{};
    if (m < 0 || m > n) return kZero;
    if (m == 0) return kOne;
    auto it = g_gaussian_table.find({n, m});
    if (it != g_gaussian_table.end()) return it->second;
    IntPoly value =
        gaussian_locked(n - 1, m - 1) +
        shift(gaussian_locked(n - 1, m), static_cast<std::size_t>(m));
    return g_gaussian_table.emplace(std::make_pair(n, m), std::move(value))
        .first->second;
}

IntPoly one_minus_q_to(std::size_t k) {  // 1 - q^k
    IntPoly p = IntPoly::one();
    p -= IntPoly::monomial(1, k);
    return p;
}

}  // namespace

IntPoly gaussian(int n, int m) {
    if (n < 0) throw OutOfRangeError("gaussian: n must be nonnegative, got " + std::to_string(n));
    if (m < 0 || m > n) return IntPoly{};
    std::lock_guard<std::mutex> lock(g_gaussian_mutex);
    return gaussian_locked(n, m);
}

IntPoly gaussian_oracle(int n, int m) {
    if (n < 0 || m < 0 || m > n) {
        throw OutOfRangeError("gaussian_oracle: requires 0 <= m <= n");
    }
    std::vector<Coeff> coeffs(static_cast<std::size_t>(m * (n - m)) + 1, Coeff(0));
    BoxEnumerator boxes(static_cast<std::size_t>(m), static_cast<std::size_t>(n - m));
    while (auto lambda = boxes.next()) {
        coeffs[static_cast<std::size_t>(lambda->weight())] += 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly kaplansky(int n, int m) {
    if (n < 1 || m < 0 || m > n) {
        throw OutOfRangeError("kaplansky: requires n >= 1 and 0 <= m <= n");
    }
    return shift(gaussian(n, m), static_cast<std::size_t>(m)) + gaussian(n - 1, m - 1);
}

IntPoly kaplansky_by_division(int n, int m) {
    if (n < 1 || m < 0 || m > n) {
        throw OutOfRangeError("kaplansky_by_division: requires n >= 1 and 0 <= m <= n");
    }
    return exact_div(gaussian(n, m) * one_minus_q_to(static_cast<std::size_t>(n + m)),
                     one_minus_q_to(static_cast<std::size_t>(n)));
}

IntPoly reiner_stanton(int n, int m) {
    if (n < 0 || m < 0) throw OutOfRangeError("reiner_stanton: requires n, m >= 0");
    IntPoly first = gaussian(n + m, m);
    if (m < 2) return first;  // the subtracted term vanishes
    return first - shift(gaussian(n + m - 2, m - 2), static_cast<std::size_t>(n));
}

IntPoly q_catalan(int n) {
    if (n < 0) throw OutOfRangeError("q_catalan: requires n >= 0");
    return exact_div(gaussian(2 * n, n) * one_minus_q_to(1),
                     one_minus_q_to(static_cast<std::size_t>(n) + 1));
}

}  // namespace qkap
