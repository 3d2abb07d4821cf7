#include "qkap/bijections.hpp"

#include <algorithm>

namespace qkap {

namespace {

void append_run(std::vector<bool>& out, bool value, std::size_t count) {
    out.insert(out.end(), count, value);
}

bool is_sorted_word(const std::vector<bool>& bits) {
    return std::is_sorted(bits.begin(), bits.end());
}

}  // namespace

BinaryWord RunDecomposition::reassemble() const {
    std::vector<bool> out;
    for (std::size_t i = 0; i < zero_runs.size(); ++i) {
        append_run(out, false, zero_runs[i]);
        append_run(out, true, one_runs[i]);
    }
    return BinaryWord(std::move(out));
}

RunDecomposition run_decompose(const BinaryWord& w) {
    RunDecomposition rd;
    const auto& bits = w.bits();
    std::size_t i = 0;
    const std::size_t n = bits.size();
    for (;;) {
        std::size_t z = 0, o = 0;
        while (i < n && !bits[i]) ++z, ++i;
        while (i < n && bits[i]) ++o, ++i;
        rd.zero_runs.push_back(z);
        rd.one_runs.push_back(o);
        if (i >= n) break;
    }
    return rd;
}

BinaryWord foata(const BinaryWord& w) {
    RunDecomposition rd = run_decompose(w);
    const std::size_t d = rd.descents();
    if (d == 0) return w;
    std::vector<bool> out;
    out.reserve(w.size());
    for (std::size_t i = d; i >= 1; --i) {
        append_run(out, false, rd.zero_runs[i] - 1);
        out.push_back(true);
    }
    append_run(out, false, rd.zero_runs[0]);
    for (std::size_t i = 0; i < d; ++i) {
        append_run(out, true, rd.one_runs[i] - 1);
        out.push_back(false);
    }
    append_run(out, true, rd.one_runs[d]);
    return BinaryWord(std::move(out));
}

BinaryWord foata_inv(const BinaryWord& w) {
    const std::vector<bool>& bits = w.bits();
    if (is_sorted_word(bits)) return w;  // 0^a 1^b stays put
    const std::size_t n = bits.size();
    std::size_t a = 0;
    while (!bits[a]) ++a;  // a < n since the word has a 1
    std::size_t b = 0;
    while (bits[n - 1 - b]) ++b;  // the word has a 0 past position a
    // unsorted means bits[a] = 1 and bits[n-1-b] = 0 with a < n-1-b
    BinaryWord u(std::vector<bool>(bits.begin() + static_cast<long>(a) + 1,
                                   bits.begin() + static_cast<long>(n - b - 1)));
    std::vector<bool> out = foata_inv(u).bits();
    out.push_back(true);
    append_run(out, false, a + 1);
    append_run(out, true, b);
    return BinaryWord(std::move(out));
}

BinaryWord psi(const BinaryWord& w) {
    std::vector<bool> out = w.bits();
    out.push_back(false);
    return BinaryWord(std::move(out));
}

BinaryWord psi_inv(const BinaryWord& w) {
    if (w.size() == 0 || w.bit(w.size())) {
        throw NotInImageError("psi_inv: word must end in 0");
    }
    std::vector<bool> out = w.bits();
    out.pop_back();
    return BinaryWord(std::move(out));
}

BinaryWord wrap(const BinaryWord& w) {
    std::vector<bool> out;
    out.reserve(w.size() + 2);
    out.push_back(false);
    out.insert(out.end(), w.bits().begin(), w.bits().end());
    out.push_back(true);
    return BinaryWord(std::move(out));
}

BinaryWord wrap_inv(const BinaryWord& w) {
    if (w.size() < 2 || w.bit(1) || !w.bit(w.size())) {
        throw NotInImageError("wrap_inv: word must look like 0...1");
    }
    const auto& bits = w.bits();
    return BinaryWord(std::vector<bool>(bits.begin() + 1, bits.end() - 1));
}

BinaryWord tau(const BinaryWord& w) {
    std::vector<bool> out;
    out.reserve(w.size() + 2);
    const auto t = last_zero_position(w);
    const std::size_t cut = t.value_or(0);  // no 0 at all: prepend one
    const auto& bits = w.bits();
    out.insert(out.end(), bits.begin(), bits.begin() + static_cast<long>(cut));
    out.push_back(false);
    out.insert(out.end(), bits.begin() + static_cast<long>(cut), bits.end());
    out.push_back(true);
    return BinaryWord(std::move(out));
}

BinaryWord tau_inv(const BinaryWord& w) {
    if (w.size() < 2 || !w.bit(w.size())) {
        throw NotInImageError("tau_inv: word must end in 1");
    }
    const auto s = last_zero_position(w);
    if (!s) throw NotInImageError("tau_inv: word needs a 0");
    if (*s >= 2 && w.bit(*s - 1)) {
        throw NotInImageError("tau_inv: the rightmost 0 must sit at position 1 or follow a 0");
    }
    const auto& bits = w.bits();
    std::vector<bool> out(bits.begin(), bits.begin() + static_cast<long>(*s - 1));
    append_run(out, true, w.size() - 2 - out.size());
    return BinaryWord(std::move(out));
}

}  // namespace qkap
