#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkap/intpoly.hpp"

namespace qkap {

// Word over {0,1}, stored as packed bits. Positions are 1-indexed
// throughout, matching the usual statistic conventions.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<bool> bits) : bits_(std::move(bits)) {}
    // Accepts only the characters '0' and '1'.
    static BinaryWord from_string(std::string_view s);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool bit(std::size_t pos) const;  // pos in [1, size()]
    void push_back(bool b) { bits_.push_back(b); }
    [[nodiscard]] std::size_t ones() const;
    [[nodiscard]] std::size_t zeros() const { return size() - ones(); }
    [[nodiscard]] const std::vector<bool>& bits() const { return bits_; }

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<bool> bits_;
};

// Number of inversions: pairs i < j with w_i = 1 and w_j = 0.
[[nodiscard]] std::size_t inv(const BinaryWord& w);
// Major index: sum of the positions i with w_i = 1 and w_{i+1} = 0.
[[nodiscard]] std::size_t maj(const BinaryWord& w);
// Position of the rightmost 0, when the word has one.
[[nodiscard]] std::optional<std::size_t> last_zero_position(const BinaryWord& w);

enum class Stat { inv, maj };
[[nodiscard]] std::size_t statistic(Stat s, const BinaryWord& w);

// The six word families. Each fixes the number of ones and zeros; beyond
// that:
//   M      no constraint
//   M0     last letter 0
//   M1     first letter 0, last letter 1
//   M1bar  last letter 1, and the rightmost 0 at position t has t = 1 or
//          another 0 at position t-1
//   K      last letter 1 implies first letter 0
//   Kbar   last letter 1 implies the M1bar condition on the rightmost 0
enum class FamilyKind { M, M0, M1, M1bar, K, Kbar };

class WordFamily {
public:
    // Shape constraints: every kind except M needs zeros >= 1, and
    // M1 / M1bar need ones >= 1. Violations raise InvalidFamilyError.
    WordFamily(FamilyKind kind, std::size_t ones, std::size_t zeros);

    [[nodiscard]] FamilyKind kind() const { return kind_; }
    [[nodiscard]] std::size_t ones() const { return ones_; }
    [[nodiscard]] std::size_t zeros() const { return zeros_; }
    [[nodiscard]] std::size_t length() const { return ones_ + zeros_; }
    [[nodiscard]] bool contains(const BinaryWord& w) const;

private:
    FamilyKind kind_;
    std::size_t ones_;
    std::size_t zeros_;
};

// Streams the family in lexicographic order of bit strings (0 < 1), without
// materializing it.
class WordEnumerator {
public:
    explicit WordEnumerator(const WordFamily& f);
    std::optional<BinaryWord> next();

private:
    WordFamily family_;
    std::vector<char> bits_;
    bool fresh_ = true;
    bool done_ = false;
};

// Convenience materialization; fine at desk-scale lengths.
[[nodiscard]] std::vector<BinaryWord> enumerate(const WordFamily& f);
[[nodiscard]] std::size_t family_size(const WordFamily& f);

// Sum over the family of q^stat(w).
[[nodiscard]] IntPoly stat_gen_poly(const WordFamily& f, Stat s);

}  // namespace qkap
