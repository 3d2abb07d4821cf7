#include "qkap/words.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "qkap/errors.hpp"
#include "qkap/qseries.hpp"

using namespace qkap;

// ---- reference implementations ---------------------------------------------
//
// Statistics recomputed by their definitions, membership predicates written
// out case by case, and families enumerated by filtering all 2^L bit strings.

namespace {

std::size_t ref_inv(const BinaryWord& w) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            if (w.bit(i) && !w.bit(j)) ++count;
    return count;
}

std::size_t ref_maj(const BinaryWord& w) {
    std::size_t sum = 0;
    for (std::size_t i = 1; i + 1 <= w.size(); ++i)
        if (w.bit(i) && !w.bit(i + 1)) sum += i;
    return sum;
}

bool ref_member(FamilyKind kind, const BinaryWord& w) {
    const std::size_t n = w.size();
    auto last_is_one = [&] { return n > 0 && w.bit(n); };
    auto m1bar_tail = [&] {
        // rightmost 0 at position t with t = 1 or another 0 just before it
        for (std::size_t t = n; t >= 1; --t) {
            if (!w.bit(t)) return t == 1 || !w.bit(t - 1);
        }
        return false;  // no 0 at all
    };
    switch (kind) {
        case FamilyKind::M: return true;
        case FamilyKind::M0: return n > 0 && !w.bit(n);
        case FamilyKind::M1: return n >= 2 && !w.bit(1) && w.bit(n);
        case FamilyKind::M1bar: return last_is_one() && m1bar_tail();
        case FamilyKind::K: return !last_is_one() || !w.bit(1);
        case FamilyKind::Kbar: return !last_is_one() || m1bar_tail();
    }
    return false;
}

std::vector<BinaryWord> brute_enumerate(const WordFamily& f) {
    const std::size_t n = f.length();
    std::vector<BinaryWord> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
        BinaryWord w(bits);
        if (w.ones() == f.ones() && ref_member(f.kind(), w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BinaryWord word(std::string_view s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("BinaryWord basics") {
    BinaryWord w = word("0101");
    CHECK(w.size() == 4);
    CHECK(w.to_string() == "0101");
    CHECK_FALSE(w.bit(1));
    CHECK(w.bit(2));
    CHECK(w.ones() == 2);
    CHECK(w.zeros() == 2);
    CHECK(word("").size() == 0);
    CHECK(word("").to_string().empty());
    CHECK_THROWS_AS((void)BinaryWord::from_string("01a"), Error);
    CHECK_THROWS_AS((void)w.bit(0), Error);
    CHECK_THROWS_AS((void)w.bit(5), Error);
    CHECK(word("01") < word("10"));
    CHECK(word("0") < word("00"));
}

TEST_CASE("statistics: hand-worked values") {
    CHECK(inv(word("10010110")) == 8);
    CHECK(maj(word("10010110")) == 12);
    CHECK(inv(word("0101")) == 1);
    CHECK(maj(word("0101")) == 2);
    CHECK(inv(word("10")) == 1);
    CHECK(maj(word("10")) == 1);
    CHECK(inv(word("000111")) == 0);
    CHECK(maj(word("000111")) == 0);
    CHECK(inv(word("")) == 0);
    CHECK(maj(word("")) == 0);
    CHECK(statistic(Stat::inv, word("0101")) == 1);
    CHECK(statistic(Stat::maj, word("0101")) == 2);
}

TEST_CASE("last_zero_position") {
    CHECK(last_zero_position(word("0101")) == 3);
    CHECK(last_zero_position(word("111")) == std::nullopt);
    CHECK(last_zero_position(word("01001")) == 4);
    CHECK(last_zero_position(word("")) == std::nullopt);
    CHECK(last_zero_position(word("0")) == 1);
}

TEST_CASE("statistics agree with their definitions on every short word") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<bool> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
            BinaryWord w(bits);
            CHECK(inv(w) == ref_inv(w));
            CHECK(maj(w) == ref_maj(w));
        }
    }
}

TEST_CASE("family shape constraints") {
    CHECK_THROWS_AS(WordFamily(FamilyKind::M0, 2, 0), InvalidFamilyError);
    CHECK_THROWS_AS(WordFamily(FamilyKind::M1, 0, 2), InvalidFamilyError);
    CHECK_THROWS_AS(WordFamily(FamilyKind::M1bar, 0, 2), InvalidFamilyError);
    CHECK_THROWS_AS(WordFamily(FamilyKind::K, 2, 0), InvalidFamilyError);
    CHECK_THROWS_AS(WordFamily(FamilyKind::Kbar, 2, 0), InvalidFamilyError);
    CHECK_NOTHROW(WordFamily(FamilyKind::M, 2, 0));
    CHECK_NOTHROW(WordFamily(FamilyKind::M, 0, 0));
}

TEST_CASE("enumerate: hand-worked families") {
    auto strings = [](const std::vector<BinaryWord>& ws) {
        std::vector<std::string> out;
        for (const auto& w : ws) out.push_back(w.to_string());
        return out;
    };
    CHECK(strings(enumerate(WordFamily(FamilyKind::M, 1, 2))) ==
          std::vector<std::string>{"001", "010", "100"});
    CHECK(strings(enumerate(WordFamily(FamilyKind::K, 1, 2))) ==
          std::vector<std::string>{"001", "010", "100"});
    CHECK(strings(enumerate(WordFamily(FamilyKind::M1, 2, 1))) ==
          std::vector<std::string>{"011"});
    CHECK(strings(enumerate(WordFamily(FamilyKind::M0, 1, 2))) ==
          std::vector<std::string>{"010", "100"});
    CHECK(strings(enumerate(WordFamily(FamilyKind::M1bar, 2, 1))) ==
          std::vector<std::string>{"011"});
    CHECK(strings(enumerate(WordFamily(FamilyKind::M, 0, 0))) ==
          std::vector<std::string>{""});
    CHECK(family_size(WordFamily(FamilyKind::M, 2, 2)) == 6);
}

TEST_CASE("enumerator matches brute force for every kind and shape") {
    for (std::size_t n = 0; n <= 11; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            for (FamilyKind kind : {FamilyKind::M, FamilyKind::M0, FamilyKind::M1,
                                    FamilyKind::M1bar, FamilyKind::K, FamilyKind::Kbar}) {
                if (kind != FamilyKind::M && n == m) continue;
                if ((kind == FamilyKind::M1 || kind == FamilyKind::M1bar) && m == 0) continue;
                WordFamily f(kind, m, n - m);
                std::vector<BinaryWord> want = brute_enumerate(f);
                std::vector<BinaryWord> got;
                WordEnumerator en(f);
                while (auto w = en.next()) {
                    CHECK(f.contains(*w));
                    if (!got.empty()) CHECK(got.back() < *w);  // lex order, no repeats
                    got.push_back(*w);
                }
                CHECK(got == want);
                CHECK(family_size(f) == want.size());
                CHECK(enumerate(f) == want);
            }
        }
    }
}

TEST_CASE("contains agrees with the case-by-case predicate") {
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<bool> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
            BinaryWord w(bits);
            for (FamilyKind kind : {FamilyKind::M, FamilyKind::M0, FamilyKind::M1,
                                    FamilyKind::M1bar, FamilyKind::K, FamilyKind::Kbar}) {
                if ((kind == FamilyKind::M1 || kind == FamilyKind::M1bar) && w.ones() == 0)
                    continue;
                WordFamily f(kind, w.ones(), std::max<std::size_t>(w.zeros(), 1));
                bool shape_ok = w.zeros() == f.zeros();
                CHECK(f.contains(w) == (shape_ok && ref_member(kind, w)));
            }
        }
    }
}

TEST_CASE("K splits as M0 plus M1, Kbar as M0 plus M1bar") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            // shapes with at least one 0 and one 1 so all four families exist
            WordFamily k(FamilyKind::K, m, n - m + 1);
            WordFamily kbar(FamilyKind::Kbar, m, n - m + 1);
            WordFamily m0(FamilyKind::M0, m, n - m + 1);
            WordFamily m1(FamilyKind::M1, m, n - m + 1);
            WordFamily m1bar(FamilyKind::M1bar, m, n - m + 1);

            auto check_split = [&](const WordFamily& whole, const WordFamily& part) {
                std::set<BinaryWord> rest;
                for (const auto& w : enumerate(whole)) rest.insert(w);
                std::size_t removed = 0;
                for (const auto& w : enumerate(m0)) {
                    CHECK(rest.erase(w) == 1);
                    ++removed;
                }
                for (const auto& w : enumerate(part)) {
                    CHECK(rest.erase(w) == 1);
                    ++removed;
                }
                CHECK(rest.empty());
                CHECK(removed == family_size(whole));
            };
            check_split(k, m1);
            check_split(kbar, m1bar);
        }
    }
}

TEST_CASE("stat_gen_poly: hand-worked values") {
    CHECK(stat_gen_poly(WordFamily(FamilyKind::M, 2, 2), Stat::inv) ==
          IntPoly({1, 1, 2, 1, 1}));
    CHECK(stat_gen_poly(WordFamily(FamilyKind::M, 2, 2), Stat::maj) ==
          IntPoly({1, 1, 2, 1, 1}));
    CHECK(stat_gen_poly(WordFamily(FamilyKind::K, 1, 2), Stat::inv) ==
          IntPoly({1, 1, 1}));
    CHECK(stat_gen_poly(WordFamily(FamilyKind::M, 0, 3), Stat::maj) == IntPoly{1});
    CHECK(stat_gen_poly(WordFamily(FamilyKind::M, 0, 0), Stat::inv) == IntPoly{1});
}

TEST_CASE("both statistics over all words distribute as the Gaussian polynomial") {
    for (int n = 0; n <= 9; ++n) {
        for (int m = 0; m <= n; ++m) {
            WordFamily f(FamilyKind::M, static_cast<std::size_t>(m),
                         static_cast<std::size_t>(n - m));
            IntPoly want = gaussian(n, m);
            CHECK(stat_gen_poly(f, Stat::inv) == want);
            CHECK(stat_gen_poly(f, Stat::maj) == want);
        }
    }
}
