#include "qkap/checker.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "qkap/bijections.hpp"
#include "qkap/logconcavity.hpp"
#include "qkap/partitions.hpp"
#include "qkap/qseries.hpp"
#include "qkap/words.hpp"

namespace qkap {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::verified: return "verified";
        case Outcome::falsified: return "falsified";
        case Outcome::scan_report: return "scan-report";
    }
    return "?";
}

std::optional<Profile> profile_from_name(std::string_view name) {
    if (name == "quick") return Profile::quick;
    if (name == "standard") return Profile::standard;
    if (name == "extended") return Profile::extended;
    return std::nullopt;
}

std::string profile_name(Profile p) {
    switch (p) {
        case Profile::quick: return "quick";
        case Profile::standard: return "standard";
        case Profile::extended: return "extended";
    }
    return "?";
}

namespace {

using Params = std::map<std::string, long>;

// instances counts parameter grid points; a point may carry several
// assertions, each able to contribute a counterexample
struct Ctx {
    CheckReport* report;

    [[nodiscard]] int get(const std::string& key) const { return report->bounds.at(key); }
    void instance() { ++report->instances; }
    void fail(Params params, std::optional<std::size_t> index, std::string note) {
        report->counterexamples.push_back({std::move(params), index, std::move(note)});
    }
};

std::optional<std::size_t> first_difference(const IntPoly& a, const IntPoly& b) {
    const std::size_t top = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < top; ++i) {
        if (a.coeff(i) != b.coeff(i)) return i;
    }
    return std::nullopt;
}

void expect_eq(Ctx& c, const IntPoly& got, const IntPoly& want, Params params,
               const std::string& what) {
    if (got != want) {
        c.fail(std::move(params), first_difference(got, want),
               what + ": got " + got.to_string() + ", want " + want.to_string());
    }
}

void expect(Ctx& c, bool ok, Params params, std::optional<std::size_t> index,
            const std::string& note) {
    if (!ok) c.fail(std::move(params), index, note);
}

// ---- word statistic checks -------------------------------------------------

void check_macmahon(Ctx& c, Stat stat) {
    const int max_n = c.get("max_n");
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            WordFamily fam(FamilyKind::M, static_cast<std::size_t>(m),
                           static_cast<std::size_t>(n - m));
            expect_eq(c, stat_gen_poly(fam, stat), gaussian(n, m), {{"n", n}, {"m", m}},
                      stat == Stat::inv ? "inv distribution" : "maj distribution");
        }
    }
}

void check_lemma_m0(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            WordFamily fam(FamilyKind::M0, static_cast<std::size_t>(m),
                           static_cast<std::size_t>(n - m + 1));
            IntPoly want = shift(gaussian(n, m), static_cast<std::size_t>(m));
            expect_eq(c, stat_gen_poly(fam, Stat::inv), want, {{"n", n}, {"m", m}},
                      "inv distribution over last-letter-0 words");
            expect_eq(c, stat_gen_poly(fam, Stat::maj), want, {{"n", n}, {"m", m}},
                      "maj distribution over last-letter-0 words");
        }
    }
}

void check_lemma_m1(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= n; ++m) {
            c.instance();
            IntPoly want = gaussian(n - 1, m - 1);
            WordFamily m1(FamilyKind::M1, static_cast<std::size_t>(m),
                          static_cast<std::size_t>(n - m + 1));
            WordFamily m1bar(FamilyKind::M1bar, static_cast<std::size_t>(m),
                             static_cast<std::size_t>(n - m + 1));
            expect_eq(c, stat_gen_poly(m1, Stat::inv), want, {{"n", n}, {"m", m}},
                      "inv distribution over 0...1 words");
            expect_eq(c, stat_gen_poly(m1bar, Stat::maj), want, {{"n", n}, {"m", m}},
                      "maj distribution over doubled-last-zero words");
        }
    }
}

void check_comb_int(Ctx& c) {
    const int max_n = c.get("max_n");
    // the n = 0 row has no q-analogue value; the two distributions still match
    c.instance();
    expect_eq(c, stat_gen_poly(WordFamily(FamilyKind::K, 0, 1), Stat::inv),
              stat_gen_poly(WordFamily(FamilyKind::Kbar, 0, 1), Stat::maj),
              {{"n", 0}, {"m", 0}}, "inv vs maj distribution");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            IntPoly want = kaplansky(n, m);
            WordFamily k(FamilyKind::K, static_cast<std::size_t>(m),
                         static_cast<std::size_t>(n - m + 1));
            WordFamily kbar(FamilyKind::Kbar, static_cast<std::size_t>(m),
                            static_cast<std::size_t>(n - m + 1));
            expect_eq(c, stat_gen_poly(k, Stat::inv), want, {{"n", n}, {"m", m}},
                      "inv distribution over K words");
            expect_eq(c, stat_gen_poly(kbar, Stat::maj), want, {{"n", n}, {"m", m}},
                      "maj distribution over Kbar words");
        }
    }
}

void check_q1_cardinality(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            WordFamily k(FamilyKind::K, static_cast<std::size_t>(m),
                         static_cast<std::size_t>(n - m + 1));
            Coeff sum = kaplansky(n, m).at_one();
            std::size_t card = family_size(k);
            expect(c, sum == static_cast<unsigned long>(card), {{"n", n}, {"m", m}},
                   std::nullopt,
                   "coefficient sum " + sum.get_str() + " vs family size " +
                       std::to_string(card));
        }
    }
}

// ---- bijection checks ------------------------------------------------------

void check_foata(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            WordFamily fam(FamilyKind::M, static_cast<std::size_t>(m),
                           static_cast<std::size_t>(n - m));
            std::set<BinaryWord> image;
            std::size_t count = 0;
            WordEnumerator en(fam);
            while (auto w = en.next()) {
                c.instance();
                ++count;
                Params p{{"n", n}, {"m", m}};
                BinaryWord v = foata(*w);
                expect(c, inv(v) == maj(*w), p, std::nullopt,
                       "inv(foata(" + w->to_string() + ")) != maj");
                expect(c, foata_inv(v) == *w, p, std::nullopt,
                       "foata_inv does not undo foata on " + w->to_string());
                BinaryWord u = foata_inv(*w);
                expect(c, maj(u) == inv(*w), p, std::nullopt,
                       "maj(foata_inv(" + w->to_string() + ")) != inv");
                expect(c, foata(u) == *w, p, std::nullopt,
                       "foata does not undo foata_inv on " + w->to_string());
                if (n > 0 && !w->bit(static_cast<std::size_t>(n))) {
                    expect(c, !u.bit(static_cast<std::size_t>(n)), p, std::nullopt,
                           "foata_inv must keep a trailing 0 (word " + w->to_string() + ")");
                    expect(c, !v.bit(static_cast<std::size_t>(n)), p, std::nullopt,
                           "foata must keep a trailing 0 (word " + w->to_string() + ")");
                }
                image.insert(v);
            }
            expect(c, image.size() == count, {{"n", n}, {"m", m}}, std::nullopt,
                   "foata image collapsed");
        }
    }
}

// shared sweep for the three appending bijections
struct MapSpec {
    FamilyKind codomain;
    std::function<BinaryWord(const BinaryWord&)> map;
    std::function<BinaryWord(const BinaryWord&)> unmap;
    bool shifts_inv_by_ones;  // psi; otherwise the relevant statistic is kept
    Stat stat;
};

void check_word_map(Ctx& c, int n_lo, int m_lo, const MapSpec& spec) {
    const int max_n = c.get("max_n");
    for (int n = n_lo; n <= max_n; ++n) {
        for (int m = m_lo; m <= n; ++m) {
            const std::size_t dom_ones = static_cast<std::size_t>(m - m_lo);
            const std::size_t dom_zeros = static_cast<std::size_t>(n - m);
            WordFamily dom(FamilyKind::M, dom_ones, dom_zeros);
            WordFamily cod(spec.codomain, static_cast<std::size_t>(m),
                           static_cast<std::size_t>(n - m + 1));
            std::set<BinaryWord> image;
            std::size_t count = 0;
            WordEnumerator en(dom);
            while (auto w = en.next()) {
                c.instance();
                ++count;
                Params p{{"n", n}, {"m", m}};
                BinaryWord v = spec.map(*w);
                expect(c, cod.contains(v), p, std::nullopt,
                       "image word " + v.to_string() + " outside the codomain");
                std::size_t want = statistic(spec.stat, *w) +
                                   (spec.shifts_inv_by_ones ? dom_ones : 0);
                expect(c, statistic(spec.stat, v) == want, p, std::nullopt,
                       "statistic not transferred on " + w->to_string());
                expect(c, spec.unmap(v) == *w, p, std::nullopt,
                       "inverse does not undo the map on " + w->to_string());
                image.insert(v);
            }
            expect(c, image.size() == count, {{"n", n}, {"m", m}}, std::nullopt,
                   "image collapsed");
            expect(c, family_size(cod) == count, {{"n", n}, {"m", m}}, std::nullopt,
                   "image does not fill the codomain");
        }
    }
}

void check_psi(Ctx& c) {
    check_word_map(c, 0, 0,
                   {FamilyKind::M0, [](const BinaryWord& w) { return psi(w); },
                    [](const BinaryWord& w) { return psi_inv(w); }, true, Stat::inv});
}

void check_varphi(Ctx& c) {
    check_word_map(c, 1, 1,
                   {FamilyKind::M1, [](const BinaryWord& w) { return wrap(w); },
                    [](const BinaryWord& w) { return wrap_inv(w); }, false, Stat::inv});
}

void check_tau(Ctx& c) {
    check_word_map(c, 1, 1,
                   {FamilyKind::M1bar, [](const BinaryWord& w) { return tau(w); },
                    [](const BinaryWord& w) { return tau_inv(w); }, false, Stat::maj});
}

// ---- partition injection checks --------------------------------------------

template <typename Fn>
void for_each_diff_spec(int max_box, Fn&& fn) {
    for (int N = 2; N <= max_box; ++N) {
        for (int l = 1; l < N; ++l) {
            for (int m = 1; m <= l; ++m) {
                for (int M = m + (N - l); M <= max_box; ++M) {
                    fn(M, N, m, l);
                }
            }
        }
    }
}

void check_butler_injectivity(Ctx& c) {
    const int max_box = c.get("max_box");
    for_each_diff_spec(max_box, [&](int M, int N, int m, int l) {
        std::map<std::pair<Partition, Partition>, std::pair<Partition, Partition>> seen;
        for (const Partition& lam :
             enumerate_box(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(M - m + 1))) {
            for (const Partition& mu :
                 enumerate_box(static_cast<std::size_t>(l + 1), static_cast<std::size_t>(N - l - 1))) {
                c.instance();
                Params p{{"M", M}, {"N", N}, {"m", m}, {"l", l}};
                ButlerResult res = butler_inject(lam, mu, M, N, m, l);
                expect(c,
                       res.eta.fits_in_box(static_cast<std::size_t>(m),
                                           static_cast<std::size_t>(M - m)) &&
                           res.rho.fits_in_box(static_cast<std::size_t>(l),
                                               static_cast<std::size_t>(N - l)),
                       p, std::nullopt,
                       "image " + res.eta.to_string() + "," + res.rho.to_string() +
                           " outside the codomain boxes");
                auto key = std::make_pair(res.eta, res.rho);
                auto [it, fresh] = seen.emplace(key, std::make_pair(lam, mu));
                if (!fresh) {
                    c.fail(p, std::nullopt,
                           "collision: " + lam.to_string() + "," + mu.to_string() + " and " +
                               it->second.first.to_string() + "," + it->second.second.to_string() +
                               " both map to " + res.eta.to_string() + "," + res.rho.to_string());
                }
            }
        }
    });
}

void check_butler_weight(Ctx& c) {
    const int max_box = c.get("max_box");
    for_each_diff_spec(max_box, [&](int M, int N, int m, int l) {
        Params p{{"M", M}, {"N", N}, {"m", m}, {"l", l}};
        std::vector<long> dom_hist, cod_hist;
        auto bump = [](std::vector<long>& hist, std::size_t k) {
            if (k >= hist.size()) hist.resize(k + 1, 0);
            ++hist[k];
        };
        for (const Partition& lam :
             enumerate_box(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(M - m + 1))) {
            for (const Partition& mu :
                 enumerate_box(static_cast<std::size_t>(l + 1), static_cast<std::size_t>(N - l - 1))) {
                c.instance();
                ButlerResult res = butler_inject(lam, mu, M, N, m, l);
                expect(c, res.eta.weight() + res.rho.weight() == lam.weight() + mu.weight(), p,
                       std::nullopt,
                       "weight changed on " + lam.to_string() + "," + mu.to_string());
                bump(dom_hist, static_cast<std::size_t>(lam.weight() + mu.weight()));
            }
        }
        for (const Partition& eta :
             enumerate_box(static_cast<std::size_t>(m), static_cast<std::size_t>(M - m))) {
            for (const Partition& rho :
                 enumerate_box(static_cast<std::size_t>(l), static_cast<std::size_t>(N - l))) {
                bump(cod_hist, static_cast<std::size_t>(eta.weight() + rho.weight()));
            }
        }
        // counting consequence: the histogram difference is exactly the
        // coefficient list of the difference polynomial
        c.instance();
        IntPoly d = d_poly(M, N, m, l);
        const std::size_t top = std::max(cod_hist.size(), dom_hist.size());
        bool ok = true;
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < top; ++k) {
            long cod = k < cod_hist.size() ? cod_hist[k] : 0;
            long dom = k < dom_hist.size() ? dom_hist[k] : 0;
            if (d.coeff(k) != cod - dom) {
                ok = false;
                bad = k;
                break;
            }
        }
        expect(c, ok, p, bad, "histogram difference disagrees with d_poly");
    });
}

// ---- difference polynomial checks -------------------------------------------

void check_lemma_dq(Ctx& c) {
    const int max_box = c.get("max_box");
    for_each_diff_spec(max_box, [&](int M, int N, int m, int l) {
        c.instance();
        IntPoly d = d_poly(M, N, m, l);
        auto neg = first_negative_index(d);
        expect(c, !neg.has_value(), {{"M", M}, {"N", N}, {"m", m}, {"l", l}}, neg,
               neg ? "negative coefficient " + d.coeff(*neg).get_str() : "");
    });
}

void check_lemma_dqr(Ctx& c) {
    const int max_box = c.get("max_box");
    for_each_diff_spec(max_box, [&](int M, int N, int m, int l) {
        const int rmax = M - N + 2 * l - 2 * m + 2;
        const std::size_t deg_a = static_cast<std::size_t>(m * (M - m) + l * (N - l));
        for (int r = 0; r <= rmax; ++r) {
            c.instance();
            Params p{{"M", M}, {"N", N}, {"m", m}, {"l", l}, {"r", r}};
            IntPoly d = d_poly_shifted(M, N, m, l, r);
            auto neg = first_negative_index(d);
            expect(c, !neg.has_value(), p, neg,
                   neg ? "negative coefficient " + d.coeff(*neg).get_str() : "");
            // degree bookkeeping: the subtracted product has degree
            // deg_a - rmax + r, so the top survives below rmax and the two
            // leading 1s cancel exactly at it
            if (r < rmax) {
                expect(c, !d.is_zero() && d.degree() == deg_a, p, std::nullopt,
                       "degree should stay at the unshifted top");
            } else {
                expect(c, d.is_zero() || d.degree() < deg_a, p, std::nullopt,
                       "leading terms should cancel at the window top");
            }
        }
    });
}

void check_thm_logconcave(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 2; n <= max_n; ++n) {
        for (int l = 1; l < n; ++l) {
            for (int m = 1; m <= l; ++m) {
                for (int r = 0; r <= 2 * l - 2 * m + 2; ++r) {
                    c.instance();
                    IntPoly d = kaplansky_diff(n, m, l, r);
                    auto neg = first_negative_index(d);
                    expect(c, !neg.has_value(), {{"n", n}, {"m", m}, {"l", l}, {"r", r}}, neg,
                           neg ? "negative coefficient " + d.coeff(*neg).get_str() : "");
                }
            }
        }
    }
}

void check_sharpness(Ctx& c) {
    const int max_n = c.get("max_n");
    // one past the window the subtracted product's top exponent sticks out
    // with coefficient -1, so every tuple must go negative
    for (int n = 2; n <= max_n; ++n) {
        for (int l = 1; l < n; ++l) {
            for (int m = 1; m <= l; ++m) {
                c.instance();
                IntPoly d = kaplansky_diff(n, m, l, 2 * l - 2 * m + 3);
                expect(c, first_negative_index(d).has_value(), {{"n", n}, {"m", m}, {"l", l}},
                       std::nullopt, "no negative coefficient one past the window");
            }
        }
    }
}

void check_decomposition(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 2; n <= max_n; ++n) {
        for (int l = 1; l < n; ++l) {
            for (int m = 1; m <= l; ++m) {
                for (int r = 0; r <= 2 * l - 2 * m + 2; ++r) {
                    c.instance();
                    expect(c, verify_decomposition(n, m, l, r),
                           {{"n", n}, {"m", m}, {"l", l}, {"r", r}}, std::nullopt,
                           "decomposition identity failed");
                }
            }
        }
    }
}

// ---- q-series identity checks ----------------------------------------------

void check_gaussian_recursions(Ctx& c) {
    const int max_n = c.get("max_n");
    const int oracle_max_n = c.get("oracle_max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            Params p{{"n", n}, {"m", m}};
            expect_eq(c, gaussian(n, m),
                      gaussian(n - 1, m - 1) +
                          shift(gaussian(n - 1, m), static_cast<std::size_t>(m)),
                      p, "additive recurrence");
            expect_eq(c, gaussian(n - 1, m),
                      gaussian(n, m) -
                          shift(gaussian(n - 1, m - 1), static_cast<std::size_t>(n - m)),
                      p, "subtractive recurrence");
            expect_eq(c, gaussian(n, m), gaussian(n, n - m), p, "symmetry in m");
        }
    }
    for (int n = 0; n <= oracle_max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            expect_eq(c, gaussian(n, m), gaussian_oracle(n, m), {{"n", n}, {"m", m}},
                      "recurrence vs box enumeration");
        }
    }
}

void check_kaplansky_identities(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            Params p{{"n", n}, {"m", m}};
            IntPoly k = kaplansky(n, m);
            expect_eq(c, k, kaplansky_by_division(n, m), p, "additive vs division route");
            expect_eq(c, k,
                      gaussian(n, m) +
                          shift(gaussian(n - 1, m - 1), static_cast<std::size_t>(n)),
                      p, "second additive form");
        }
    }
}

void check_kaplansky_symmetry_degree(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            c.instance();
            Params p{{"n", n}, {"m", m}};
            IntPoly k = kaplansky(n, m);
            expect(c, is_symmetric(k), p, std::nullopt, "coefficients not palindromic");
            expect(c, k.degree() == static_cast<std::size_t>(m * (n - m) + m), p,
                   std::nullopt, "degree is not m(n-m)+m");
        }
    }
}

void check_rs_unimodal(Ctx& c) {
    const int max_n = c.get("max_n");
    const int max_m = c.get("max_m");
    for (int n = 2; n <= max_n; n += 2) {
        for (int m = 2; m <= max_m; ++m) {
            c.instance();
            Params p{{"n", n}, {"m", m}};
            IntPoly f = reiner_stanton(n, m);
            expect(c, is_symmetric(f), p, std::nullopt, "not symmetric");
            auto bad = unimodality_violation(f);
            expect(c, !bad.has_value(), p, bad, bad ? "valley in the coefficients" : "");
        }
    }
}

void check_rs_kaplansky(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= n; ++m) {
            c.instance();
            expect_eq(c, reiner_stanton(n, m), kaplansky(n + m - 1, m),
                      {{"n", n}, {"m", m}}, "difference form vs q-analogue");
        }
    }
}

void check_kaplansky_unimodal_odd(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 2; n <= max_n; ++n) {
        for (int m = 2; m <= n; ++m) {
            c.instance();
            Params p{{"n", n}, {"m", m}};
            IntPoly k = kaplansky(n, m);
            expect(c, is_symmetric(k), p, std::nullopt, "not symmetric");
            if ((n - m) % 2 == 1) {
                auto bad = unimodality_violation(k);
                expect(c, !bad.has_value(), p, bad, bad ? "valley despite odd n-m" : "");
            }
        }
    }
}

void check_kaplansky_nonunimodal_example(Ctx& c) {
    c.instance();
    const IntPoly want{1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1};
    IntPoly k = kaplansky(6, 2);
    expect_eq(c, k, want, {{"n", 6}, {"m", 2}}, "known non-unimodal value");
    auto bad = unimodality_violation(k);
    expect(c, bad == std::optional<std::size_t>{5}, {{"n", 6}, {"m", 2}}, bad,
           "expected the valley at exponent 5");
}

// ---- q-Catalan checks --------------------------------------------------------

IntPoly one_minus_q_to(std::size_t k) {
    IntPoly p = IntPoly::one();
    p -= IntPoly::monomial(1, k);
    return p;
}

IntPoly one_plus_q_to(std::size_t k) {
    IntPoly p = IntPoly::one();
    p += IntPoly::monomial(1, k);
    return p;
}

void check_catalan_kaplansky(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 0; n <= max_n; ++n) {
        c.instance();
        expect_eq(c, one_minus_q_to(1) * kaplansky(2 * n + 1, n),
                  one_minus_q_to(static_cast<std::size_t>(3 * n + 1)) * q_catalan(n),
                  {{"n", n}}, "(1-q) multiple of the central q-analogue");
    }
}

void check_thm16(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 0; n <= max_n; n += 2) {
        c.instance();
        Params p{{"n", n}};
        IntPoly poly = exact_div(one_minus_q_to(static_cast<std::size_t>(3 * n + 1)) *
                                     q_catalan(n),
                                 one_minus_q_to(1));
        expect(c, is_symmetric(poly), p, std::nullopt, "not symmetric");
        auto bad = unimodality_violation(poly);
        expect(c, !bad.has_value(), p, bad, bad ? "valley in the coefficients" : "");
    }
}

void check_stanley(Ctx& c) {
    const int max_n = c.get("max_n");
    for (int n = 1; n <= max_n; ++n) {
        c.instance();
        Params p{{"n", n}};
        IntPoly poly = exact_div(one_plus_q_to(1) * q_catalan(n),
                                 one_plus_q_to(static_cast<std::size_t>(n)));
        expect(c, is_symmetric(poly), p, std::nullopt, "not symmetric");
        auto bad = unimodality_violation(poly);
        expect(c, !bad.has_value(), p, bad, bad ? "valley in the coefficients" : "");
    }
}

// Every q-Catalan polynomial of degree >= 2 starts and ends 1, 0, 1: the
// coefficient of q is p(1) - p(0) = 0 before the 1/(1-q^{n+1}) factor can
// reach that exponent, and symmetry mirrors the dip. The open question is
// about the window between those two structural dips (which is also the
// only reading under which it implies the (1+q)-multiple conjecture).
std::optional<std::size_t> catalan_interior_violation(const IntPoly& p) {
    const std::vector<Coeff>& cs = p.coeffs();
    if (cs.size() < 5) return std::nullopt;  // window empty
    std::vector<Coeff> window(cs.begin() + 2, cs.end() - 2);
    if (auto bad = unimodality_violation(IntPoly(std::move(window)))) return *bad + 2;
    return std::nullopt;
}

void scan_into(Ctx& c, bool with_one_plus_q, int from, int to) {
    for (int n = from; n <= to; ++n) {
        c.instance();
        IntPoly poly = q_catalan(n);
        std::optional<std::size_t> bad;
        if (with_one_plus_q) {
            poly = one_plus_q_to(1) * poly;
            bad = unimodality_violation(poly);
        } else {
            bad = catalan_interior_violation(poly);
        }
        if (bad) {
            c.fail({{"n", n}}, bad,
                   "valley at exponent " + std::to_string(*bad) + " (coefficient " +
                       poly.coeff(*bad).get_str() + ")");
        }
    }
}

void check_conj18(Ctx& c) { scan_into(c, false, 16, c.get("max_n")); }
void check_conj19(Ctx& c) { scan_into(c, true, 1, c.get("max_n")); }

// ---- registry ---------------------------------------------------------------

struct CheckDef {
    std::string id;
    std::string description;
    std::string primary;  // bound the generic knob adjusts; empty when fixed
    bool is_scan = false;
    std::map<std::string, int> quick, standard, extended, guard;
    std::function<void(Ctx&)> fn;
};

const std::vector<CheckDef>& defs() {
    static const std::vector<CheckDef> table = [] {
        std::vector<CheckDef> t;
        auto one = [](int q, int s, int e, int g) {
            return std::array<std::map<std::string, int>, 4>{
                std::map<std::string, int>{{"max_n", q}},
                std::map<std::string, int>{{"max_n", s}},
                std::map<std::string, int>{{"max_n", e}},
                std::map<std::string, int>{{"max_n", g}}};
        };
        auto box = [](int q, int s, int e, int g) {
            return std::array<std::map<std::string, int>, 4>{
                std::map<std::string, int>{{"max_box", q}},
                std::map<std::string, int>{{"max_box", s}},
                std::map<std::string, int>{{"max_box", e}},
                std::map<std::string, int>{{"max_box", g}}};
        };
        auto add = [&t](std::string id, std::string description, std::string primary,
                        bool is_scan, std::array<std::map<std::string, int>, 4> b,
                        std::function<void(Ctx&)> fn) {
            t.push_back({std::move(id), std::move(description), std::move(primary), is_scan,
                         std::move(b[0]), std::move(b[1]), std::move(b[2]), std::move(b[3]),
                         std::move(fn)});
        };

        add("macmahon-inv",
            "inv over fixed-content words is distributed by the Gaussian polynomial",
            "max_n", false, one(8, 12, 13, 18), [](Ctx& c) { check_macmahon(c, Stat::inv); });
        add("macmahon-maj",
            "maj over fixed-content words is distributed by the Gaussian polynomial",
            "max_n", false, one(8, 12, 13, 18), [](Ctx& c) { check_macmahon(c, Stat::maj); });
        add("lemma-m0",
            "both statistics over last-letter-0 words give q^m times the Gaussian polynomial",
            "max_n", false, one(8, 12, 13, 18), check_lemma_m0);
        add("lemma-m1",
            "inv over 0...1 words and maj over doubled-last-zero words give the smaller Gaussian polynomial",
            "max_n", false, one(8, 12, 13, 18), check_lemma_m1);
        add("thm-comb-int",
            "the q-analogue counts K words by inv and Kbar words by maj",
            "max_n", false, one(8, 12, 13, 18), check_comb_int);
        add("foata-roundtrip",
            "the run-shuffling map sends maj to inv, round-trips with its inverse, and keeps trailing zeros",
            "max_n", false, one(8, 12, 13, 18), check_foata);
        add("psi-bijection",
            "appending a 0 is a bijection onto last-letter-0 words shifting inv by the number of ones",
            "max_n", false, one(8, 12, 13, 18), check_psi);
        add("varphi-bijection",
            "wrapping as 0w1 is an inv-preserving bijection onto 0...1 words",
            "max_n", false, one(8, 12, 13, 18), check_varphi);
        add("tau-bijection",
            "doubling the rightmost 0 is a maj-preserving bijection onto doubled-last-zero words",
            "max_n", false, one(8, 12, 13, 18), check_tau);
        add("butler-injectivity",
            "the two-stage prefix swap never collides inside its boxes",
            "max_box", false, box(5, 7, 8, 10), check_butler_injectivity);
        add("butler-weight",
            "the prefix swap preserves weight and its counting consequence matches d_poly",
            "max_box", false, box(5, 7, 8, 10), check_butler_weight);
        add("lemma-dq",
            "the Gaussian product difference has nonnegative coefficients",
            "max_box", false, box(7, 10, 12, 16), check_lemma_dq);
        add("lemma-dqr",
            "the shifted Gaussian product difference stays nonnegative through its window",
            "max_box", false, box(7, 10, 12, 16), check_lemma_dqr);
        add("thm-logconcave",
            "the shifted q-analogue product difference stays nonnegative through its window",
            "max_n", false, one(7, 10, 12, 16), check_thm_logconcave);
        add("logconcave-sharpness",
            "every difference goes negative one step past the window",
            "max_n", false, one(6, 8, 10, 14), check_sharpness);
        add("decomposition-identity",
            "the difference splits into four shifted d_poly terms and the boundary terms merge",
            "max_n", false, one(7, 10, 12, 16), check_decomposition);
        add("gaussian-recursions",
            "both recurrences, symmetry, and the box-enumeration oracle agree",
            "max_n", false,
            std::array<std::map<std::string, int>, 4>{
                std::map<std::string, int>{{"max_n", 12}, {"oracle_max_n", 10}},
                std::map<std::string, int>{{"max_n", 20}, {"oracle_max_n", 14}},
                std::map<std::string, int>{{"max_n", 24}, {"oracle_max_n", 15}},
                std::map<std::string, int>{{"max_n", 40}, {"oracle_max_n", 18}}},
            check_gaussian_recursions);
        add("kaplansky-identities",
            "the additive, division, and second additive routes agree",
            "max_n", false, one(12, 20, 24, 40), check_kaplansky_identities);
        add("kaplansky-symmetry-degree",
            "the q-analogue is palindromic of degree m(n-m)+m",
            "max_n", false, one(12, 20, 24, 40), check_kaplansky_symmetry_degree);
        add("reiner-stanton-unimodal",
            "the difference form is symmetric and unimodal for even n and m >= 2",
            "max_n", false,
            std::array<std::map<std::string, int>, 4>{
                std::map<std::string, int>{{"max_n", 8}, {"max_m", 6}},
                std::map<std::string, int>{{"max_n", 12}, {"max_m", 8}},
                std::map<std::string, int>{{"max_n", 16}, {"max_m", 10}},
                std::map<std::string, int>{{"max_n", 30}, {"max_m", 16}}},
            check_rs_unimodal);
        add("reiner-stanton-kaplansky",
            "the difference form equals the q-analogue at shifted arguments",
            "max_n", false, one(10, 14, 16, 30), check_rs_kaplansky);
        add("kaplansky-unimodal-odd",
            "the q-analogue is symmetric, and unimodal whenever n-m is odd",
            "max_n", false, one(10, 14, 18, 40), check_kaplansky_unimodal_odd);
        add("kaplansky-nonunimodal-example",
            "the (6,2) value matches its known coefficients and dips at exponent 5",
            "", false,
            std::array<std::map<std::string, int>, 4>{
                std::map<std::string, int>{{"n", 6}, {"m", 2}},
                std::map<std::string, int>{{"n", 6}, {"m", 2}},
                std::map<std::string, int>{{"n", 6}, {"m", 2}},
                std::map<std::string, int>{{"n", 6}, {"m", 2}}},
            check_kaplansky_nonunimodal_example);
        add("catalan-kaplansky-relation",
            "(1-q) times the central q-analogue equals (1-q^{3n+1}) times the q-Catalan polynomial",
            "max_n", false, one(7, 10, 12, 30), check_catalan_kaplansky);
        add("thm16-unimodal",
            "(1-q^{3n+1})/(1-q) times the q-Catalan polynomial is symmetric and unimodal for even n",
            "max_n", false, one(8, 12, 16, 30), check_thm16);
        add("stanley-unimodal",
            "(1+q)/(1+q^n) times the q-Catalan polynomial is symmetric and unimodal",
            "max_n", false, one(15, 30, 36, 50), check_stanley);
        add("conj18-scan",
            "unimodality sweep of the q-Catalan polynomials between their structural end dips, from n = 16",
            "max_n", true, one(20, 40, 48, 60), check_conj18);
        add("conj19-scan",
            "unimodality sweep of (1+q) times the q-Catalan polynomials",
            "max_n", true, one(15, 30, 36, 50), check_conj19);
        add("q1-cardinality",
            "the coefficient sum of the q-analogue counts the K family",
            "max_n", false, one(8, 12, 13, 18), check_q1_cardinality);
        return t;
    }();
    return table;
}

const CheckDef& find_def(std::string_view id) {
    for (const CheckDef& d : defs()) {
        if (d.id == id) return d;
    }
    throw UnknownCheckError("unknown check id: " + std::string(id));
}

const std::map<std::string, int>& bounds_for(const CheckDef& d, Profile p) {
    switch (p) {
        case Profile::quick: return d.quick;
        case Profile::standard: return d.standard;
        case Profile::extended: return d.extended;
    }
    return d.standard;
}

CheckReport run_def(const CheckDef& def, std::map<std::string, int> bounds) {
    CheckReport report;
    report.check = def.id;
    report.bounds = std::move(bounds);
    Ctx ctx{&report};
    auto t0 = std::chrono::steady_clock::now();
    def.fn(ctx);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (def.is_scan) {
        report.outcome = Outcome::scan_report;
    } else {
        report.outcome =
            report.counterexamples.empty() ? Outcome::verified : Outcome::falsified;
    }
    return report;
}

}  // namespace

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const CheckDef& d : defs()) v.push_back(d.id);
        return v;
    }();
    return ids;
}

bool is_check_id(std::string_view id) {
    for (const CheckDef& d : defs()) {
        if (d.id == id) return true;
    }
    return false;
}

std::string check_description(const std::string& id) { return find_def(id).description; }

CheckBounds default_bounds(const std::string& id, Profile p) {
    return {bounds_for(find_def(id), p), false};
}

std::string primary_bound_key(const std::string& id) { return find_def(id).primary; }

CheckReport run_check(const std::string& id, const CheckBounds& bounds) {
    const CheckDef& def = find_def(id);
    std::map<std::string, int> merged = def.standard;
    for (const auto& [key, value] : bounds.values) {
        auto it = merged.find(key);
        if (it == merged.end()) {
            throw Error("check " + id + " has no bound named " + key);
        }
        if (def.primary.empty() && value != it->second) {
            throw Error("check " + id + " has fixed parameters");
        }
        it->second = value;
    }
    for (const auto& [key, cap] : def.guard) {
        auto it = merged.find(key);
        if (it != merged.end() && it->second > cap && !bounds.allow_large) {
            throw BoundsTooLargeError("check " + id + ": " + key + " = " +
                                      std::to_string(it->second) + " exceeds the guard " +
                                      std::to_string(cap) +
                                      "; raise it only with allow-large");
        }
    }
    return run_def(def, std::move(merged));
}

CheckReport run_check(const std::string& id, Profile p) {
    const CheckDef& def = find_def(id);
    return run_def(def, bounds_for(def, p));
}

std::vector<CheckReport> run_all(Profile p) {
    std::vector<CheckReport> reports;
    reports.reserve(defs().size());
    for (const CheckDef& def : defs()) reports.push_back(run_def(def, bounds_for(def, p)));
    return reports;
}

CheckReport scan_conjecture(const std::string& which, int from, int to, bool allow_large) {
    bool with_one_plus_q;
    int guard;
    if (which == "conj18") {
        with_one_plus_q = false;
        guard = 60;
    } else if (which == "conj19") {
        with_one_plus_q = true;
        guard = 50;
    } else {
        throw UnknownCheckError("unknown conjecture: " + which +
                                " (expected conj18 or conj19)");
    }
    if (from < 0 || to < from) {
        throw InvalidSpecError("scan: need 0 <= from <= to");
    }
    if (to > guard && !allow_large) {
        throw BoundsTooLargeError("scan " + which + ": to = " + std::to_string(to) +
                                  " exceeds the guard " + std::to_string(guard) +
                                  "; raise it only with allow-large");
    }
    CheckReport report;
    report.check = which + "-scan";
    report.bounds = {{"from", from}, {"to", to}};
    Ctx ctx{&report};
    auto t0 = std::chrono::steady_clock::now();
    scan_into(ctx, with_one_plus_q, from, to);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.outcome = Outcome::scan_report;
    return report;
}

}  // namespace qkap
