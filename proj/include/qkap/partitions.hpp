#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qkap/errors.hpp"

namespace qkap {

// Integer partition: weakly decreasing positive parts. part(i) is 1-indexed
// and reads 0 past the end, which keeps prefix-swap arithmetic uniform.
class Partition {
public:
    Partition() = default;
    // Accepts weakly decreasing entries >= 0 and strips the zeros.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] int part(std::size_t i) const;
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] long weight() const;
    [[nodiscard]] Partition conjugate() const;
    // At most `rows` parts, each at most `cols`.
    [[nodiscard]] bool fits_in_box(std::size_t rows, std::size_t cols) const;
    // "(3,1)"; the empty partition prints as "()"
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Streams every partition that fits in a rows x cols box, the empty one
// included, in lexicographic order of part lists. C(rows+cols, rows) members
// in total, so callers control cost through the box size.
class BoxEnumerator {
public:
    BoxEnumerator(std::size_t rows, std::size_t cols);
    std::optional<Partition> next();

private:
    std::size_t rows_, cols_;
    std::vector<int> cur_;
    bool fresh_ = true;
    bool done_ = false;
};

[[nodiscard]] std::vector<Partition> enumerate_box(std::size_t rows, std::size_t cols);

// Intermediate state of the two-stage prefix swap, kept for tests and traces.
// gamma/tau are the partitions after the first swap; the *_conj vectors are
// their conjugates zero-padded to lengths M-m and N-l; the *_tilde vectors
// are the padded sequences after the second swap.
struct InjectionTrace {
    std::size_t I = 0;
    std::size_t J = 0;
    Partition gamma;
    Partition tau;
    std::vector<int> gamma_conj;
    std::vector<int> tau_conj;
    std::vector<int> gamma_tilde;
    std::vector<int> tau_tilde;
};

struct ButlerResult {
    Partition eta;
    Partition rho;
    InjectionTrace trace;
};

// Weight-preserving injection
//   P(m-1, M-m+1) x P(l+1, N-l-1)  -->  P(m, M-m) x P(l, N-l)
// where P(r, c) is the set of partitions in an r x c box. Requires
// 1 <= m <= l < N and M-m >= N-l >= 1; inputs outside their boxes raise
// OutOfBoxError. Stage one swaps prefixes of lambda and mu at the largest
// feasible cut with offset c1 = l-m+M-N+1; stage two repeats the swap on the
// padded conjugates with offset c2 = l-m+1. The bound facts the construction
// relies on are rechecked on every call.
ButlerResult butler_inject(const Partition& lam, const Partition& mu,
                           int M, int N, int m, int l);

}  // namespace qkap
