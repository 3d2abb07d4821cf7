#include "qkap/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qkap {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("Partition::part is 1-indexed");
    return i <= parts_.size() ? parts_[i - 1] : 0;
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts_[0]));
    for (int col = 1; col <= parts_[0]; ++col) {
        int count = 0;
        for (int p : parts_) {
            if (p >= col) ++count;
        }
        out[static_cast<std::size_t>(col - 1)] = count;
    }
    return Partition(std::move(out));
}

bool Partition::fits_in_box(std::size_t rows, std::size_t cols) const {
    if (parts_.size() > rows) return false;
    return parts_.empty() || static_cast<std::size_t>(parts_[0]) <= cols;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

BoxEnumerator::BoxEnumerator(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

std::optional<Partition> BoxEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return Partition{};  // the empty partition opens the stream
    }
    // lexicographic successor: extend with a 1 when allowed, otherwise bump
    // the last part, popping exhausted tails
    if (cur_.size() < rows_ && cols_ >= 1) {
        cur_.push_back(1);
        return Partition(cur_);
    }
    while (!cur_.empty()) {
        int cap = static_cast<int>(cols_);
        if (cur_.size() >= 2) cap = std::min(cap, cur_[cur_.size() - 2]);
        if (cur_.back() < cap) {
            ++cur_.back();
            return Partition(cur_);
        }
        cur_.pop_back();
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Partition> enumerate_box(std::size_t rows, std::size_t cols) {
    std::vector<Partition> out;
    BoxEnumerator en(rows, cols);
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

// strips zero padding so a swap result can become a Partition again
Partition to_partition(const std::vector<int>& padded) {
    std::vector<int> v = padded;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

std::vector<int> padded_conjugate(const Partition& p, std::size_t len) {
    std::vector<int> out = p.conjugate().parts();
    if (out.size() > len) {
        throw Error("butler_inject internal: conjugate outgrew its padding");
    }
    out.resize(len, 0);
    return out;
}

int at(const std::vector<int>& v, std::size_t i) {  // 1-indexed, 0 past the end
    return i >= 1 && i <= v.size() ? v[i - 1] : 0;
}

}  // namespace

ButlerResult butler_inject(const Partition& lam, const Partition& mu,
                           int M, int N, int m, int l) {
    if (!(1 <= m && m <= l && l < N && M - m >= N - l && N - l >= 1)) {
        throw OutOfBoxError("butler_inject: parameters must satisfy 1 <= m <= l < N and M-m >= N-l >= 1");
    }
    if (!lam.fits_in_box(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(M - m + 1))) {
        throw OutOfBoxError("butler_inject: first partition " + lam.to_string() +
                            " does not fit the (m-1) x (M-m+1) box");
    }
    if (!mu.fits_in_box(static_cast<std::size_t>(l + 1), static_cast<std::size_t>(N - l - 1))) {
        throw OutOfBoxError("butler_inject: second partition " + mu.to_string() +
                            " does not fit the (l+1) x (N-l-1) box");
    }

    InjectionTrace trace;

    // stage one: swap prefixes of lambda and mu with offset c1, cutting at
    // the largest I whose junction stays weakly decreasing
    const int c1 = l - m + M - N + 1;
    std::size_t I = 0;
    for (std::size_t i = static_cast<std::size_t>(m - 1); i >= 1; --i) {
        if (lam.part(i) >= mu.part(i + 1) + c1) {
            I = i;
            break;
        }
    }
    std::vector<int> gamma_parts, tau_parts;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(m - 1); ++i) {
        gamma_parts.push_back(i <= I ? mu.part(i) + c1 : lam.part(i));
    }
    for (std::size_t i = 1; i <= static_cast<std::size_t>(l + 1); ++i) {
        tau_parts.push_back(i <= I ? lam.part(i) - c1 : mu.part(i));
    }
    trace.I = I;
    trace.gamma = to_partition(gamma_parts);
    trace.tau = to_partition(tau_parts);

    // facts the injection proof leans on; cheap to recheck every call
    if (trace.gamma.part(1) > M - m || trace.tau.part(1) > N - l) {
        throw Error("butler_inject internal: stage-one result left its box");
    }
    if (I == 0 && (trace.gamma.part(1) >= M - m || trace.tau.part(1) >= N - l)) {
        throw Error("butler_inject internal: uncut stage one must land strictly inside");
    }

    // stage two: same swap on the zero-padded conjugates with offset c2
    trace.gamma_conj = padded_conjugate(trace.gamma, static_cast<std::size_t>(M - m));
    trace.tau_conj = padded_conjugate(trace.tau, static_cast<std::size_t>(N - l));
    const int c2 = l - m + 1;
    std::size_t J = 0;
    for (std::size_t j = static_cast<std::size_t>(N - l); j >= 1; --j) {
        if (at(trace.tau_conj, j) >= at(trace.gamma_conj, j + 1) + c2) {
            J = j;
            break;
        }
    }
    trace.J = J;
    trace.gamma_tilde.clear();
    trace.tau_tilde.clear();
    for (std::size_t j = 1; j <= static_cast<std::size_t>(M - m); ++j) {
        trace.gamma_tilde.push_back(j <= J ? at(trace.tau_conj, j) - c2
                                           : at(trace.gamma_conj, j));
    }
    for (std::size_t j = 1; j <= static_cast<std::size_t>(N - l); ++j) {
        trace.tau_tilde.push_back(j <= J ? at(trace.gamma_conj, j) + c2
                                         : at(trace.tau_conj, j));
    }

    if (at(trace.gamma_tilde, 1) > m || at(trace.tau_tilde, 1) > l) {
        throw Error("butler_inject internal: stage-two result left its box");
    }
    if (J == 0 && (at(trace.gamma_tilde, 1) >= m || at(trace.tau_tilde, 1) >= l)) {
        throw Error("butler_inject internal: uncut stage two must land strictly inside");
    }

    ButlerResult result;
    result.eta = to_partition(trace.gamma_tilde).conjugate();
    result.rho = to_partition(trace.tau_tilde).conjugate();
    result.trace = std::move(trace);

    if (!result.eta.fits_in_box(static_cast<std::size_t>(m), static_cast<std::size_t>(M - m)) ||
        !result.rho.fits_in_box(static_cast<std::size_t>(l), static_cast<std::size_t>(N - l))) {
        throw Error("butler_inject internal: image left the codomain boxes");
    }
    if (result.eta.weight() + result.rho.weight() != lam.weight() + mu.weight()) {
        throw Error("butler_inject internal: weight not preserved");
    }
    return result;
}

}  // namespace qkap
