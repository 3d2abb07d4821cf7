#include "qkap/words.hpp"

#include <algorithm>

namespace qkap {

BinaryWord BinaryWord::from_string(std::string_view s) {
    std::vector<bool> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw Error("BinaryWord: expected only 0/1, got '" + std::string(1, c) + "'");
        }
        bits.push_back(c == '1');
    }
    return BinaryWord(std::move(bits));
}

std::string BinaryWord::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

bool BinaryWord::bit(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size()) throw Error("BinaryWord::bit: position out of range");
    return bits_[pos - 1];
}

std::size_t BinaryWord::ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::size_t inv(const BinaryWord& w) {
    std::size_t ones_seen = 0, total = 0;
    for (bool b : w.bits()) {
        if (b) {
            ++ones_seen;
        } else {
            total += ones_seen;
        }
    }
    return total;
}

std::size_t maj(const BinaryWord& w) {
    std::size_t total = 0;
    const auto& bits = w.bits();
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        if (bits[i] && !bits[i + 1]) total += i + 1;  // descent at 1-indexed i+1
    }
    return total;
}

std::optional<std::size_t> last_zero_position(const BinaryWord& w) {
    const auto& bits = w.bits();
    for (std::size_t i = bits.size(); i-- > 0;) {
        if (!bits[i]) return i + 1;
    }
    return std::nullopt;
}

std::size_t statistic(Stat s, const BinaryWord& w) {
    return s == Stat::inv ? inv(w) : maj(w);
}

WordFamily::WordFamily(FamilyKind kind, std::size_t ones, std::size_t zeros)
    : kind_(kind), ones_(ones), zeros_(zeros) {
    if (kind != FamilyKind::M && zeros == 0) {
        throw InvalidFamilyError("word family needs at least one 0");
    }
    if ((kind == FamilyKind::M1 || kind == FamilyKind::M1bar) && ones == 0) {
        throw InvalidFamilyError("word family needs at least one 1");
    }
}

namespace {

// the rightmost 0 sits at position 1 or follows another 0
bool doubled_last_zero(const BinaryWord& w) {
    auto t = last_zero_position(w);
    return t && (*t == 1 || !w.bit(*t - 1));
}

}  // namespace

bool WordFamily::contains(const BinaryWord& w) const {
    if (w.size() != length() || w.ones() != ones_) return false;
    const std::size_t n = w.size();
    switch (kind_) {
        case FamilyKind::M:
            return true;
        case FamilyKind::M0:
            return !w.bit(n);
        case FamilyKind::M1:
            return !w.bit(1) && w.bit(n);
        case FamilyKind::M1bar:
            return w.bit(n) && doubled_last_zero(w);
        case FamilyKind::K:
            return !w.bit(n) || !w.bit(1);
        case FamilyKind::Kbar:
            return !w.bit(n) || doubled_last_zero(w);
    }
    return false;
}

WordEnumerator::WordEnumerator(const WordFamily& f) : family_(f) {
    bits_.assign(f.zeros(), 0);
    bits_.insert(bits_.end(), f.ones(), 1);  // ascending start = lex smallest
}

std::optional<BinaryWord> WordEnumerator::next() {
    while (!done_) {
        if (fresh_) {
            fresh_ = false;
        } else if (!std::next_permutation(bits_.begin(), bits_.end())) {
            done_ = true;
            break;
        }
        BinaryWord w(std::vector<bool>(bits_.begin(), bits_.end()));
        if (family_.contains(w)) return w;
    }
    return std::nullopt;
}

std::vector<BinaryWord> enumerate(const WordFamily& f) {
    std::vector<BinaryWord> out;
    WordEnumerator en(f);
    while (auto w = en.next()) out.push_back(std::move(*w));
    return out;
}

std::size_t family_size(const WordFamily& f) {
    std::size_t count = 0;
    WordEnumerator en(f);
    while (en.next()) ++count;
    return count;
}

IntPoly stat_gen_poly(const WordFamily& f, Stat s) {
    std::vector<Coeff> coeffs;
    WordEnumerator en(f);
    while (auto w = en.next()) {
        std::size_t k = statistic(s, *w);
        if (k >= coeffs.size()) coeffs.resize(k + 1, Coeff(0));
        coeffs[k] += 1;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace qkap
