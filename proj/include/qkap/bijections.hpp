#pragma once

#include <cstddef>
#include <vector>

#include "qkap/words.hpp"

namespace qkap {

// Maximal-run split w = 0^{m_0} 1^{n_0} 0^{m_1} 1^{n_1} ... 0^{m_d} 1^{n_d}.
// Interior runs are nonempty; only m_0 and n_d may be zero. d counts the
// descents of w.
struct RunDecomposition {
    std::vector<std::size_t> zero_runs;  // m_0 .. m_d
    std::vector<std::size_t> one_runs;   // n_0 .. n_d
    [[nodiscard]] std::size_t descents() const { return zero_runs.size() - 1; }
    [[nodiscard]] BinaryWord reassemble() const;
};
[[nodiscard]] RunDecomposition run_decompose(const BinaryWord& w);

// Foata's maj-to-inv shuffle in its closed form on runs: reversed zero-run
// blocks first, then one-run blocks, each shortened by one around a moved
// letter. Sorted words (d = 0) are fixed points, and inv(foata(w)) = maj(w).
[[nodiscard]] BinaryWord foata(const BinaryWord& w);
// Recursive inverse: peel 0^a 1 u 0 1^b, recurse on u, reattach as
// u' 1 0^{a+1} 1^b. Total on binary words; maj(foata_inv(w)) = inv(w).
[[nodiscard]] BinaryWord foata_inv(const BinaryWord& w);

// Appends a 0, adding the number of ones to inv. The inverse strips the
// final 0 and rejects words that do not end in one.
[[nodiscard]] BinaryWord psi(const BinaryWord& w);
[[nodiscard]] BinaryWord psi_inv(const BinaryWord& w);  // NotInImageError

// Wraps as 0 w 1, preserving inv. The inverse strips the wrapper.
[[nodiscard]] BinaryWord wrap(const BinaryWord& w);
[[nodiscard]] BinaryWord wrap_inv(const BinaryWord& w);  // NotInImageError

// Doubles the rightmost 0 (prepends one if the word has none) and appends a
// 1, preserving maj. The inverse cuts just before the rightmost 0 and
// refills the tail with ones.
[[nodiscard]] BinaryWord tau(const BinaryWord& w);
[[nodiscard]] BinaryWord tau_inv(const BinaryWord& w);  // NotInImageError

}  // namespace qkap
