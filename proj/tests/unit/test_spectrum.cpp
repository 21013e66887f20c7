#include "edk/families.hpp"
#include "edk/spectrum.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace edk;
using families::triangle;

namespace {

ColoredGraph random_graph(std::size_t n, int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, r);
    ColoredGraph g(n, r, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, static_cast<std::uint8_t>(pick(rng)));
    return g;
}

DiGraph random_digraph(std::size_t n, ColorSet allowed, std::mt19937_64& rng) {
    std::vector<Arc> colors;
    for (unsigned i = 0; i < 4; ++i)
        if (contains(allowed, i)) colors.push_back(static_cast<Arc>(i));
    std::uniform_int_distribution<std::size_t> pick(0, colors.size() - 1);
    DiGraph g(n, 4, colors[0]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, colors[pick(rng)]);
    return g;
}

MulticolorFamily random_family(int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 2), size(2, 4);
    std::vector<ColoredGraph> hs;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) hs.push_back(random_graph(static_cast<std::size_t>(size(rng)), r, rng));
    return families::forb(r, hs);
}

// Labeled partitions tried exhaustively: each vertex picks one of the
// sum(t) parts; a part of color i must avoid color i (weak) or be an
// i-clique (strong).
bool brute_good(const ColoredGraph& h, const SpectrumTuple& t, Mode mode) {
    std::vector<int> colour_of;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int k = 0; k < t[i]; ++k) colour_of.push_back(static_cast<int>(i) + 1);
    const std::size_t parts = colour_of.size(), n = h.size();
    if (parts == 0) return n == 0;
    std::vector<std::size_t> a(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = x + 1; y < n && ok; ++y) {
                if (a[x] != a[y]) continue;
                const int c = colour_of[a[x]];
                ok = mode == Mode::weak ? h.color(x, y) != c : h.color(x, y) == c;
            }
        if (ok) return true;
        std::size_t pos = 0;
        while (pos < n && ++a[pos] == parts) a[pos++] = 0;
        if (pos == n) return false;
    }
}

bool brute_good(const MulticolorFamily& f, const SpectrumTuple& t, Mode mode) {
    for (const auto& h : f.forbidden)
        if (brute_good(h, t, mode)) return true;
    return false;
}

// cycle search over all vertex sequences
bool brute_has_cycle(const DiGraph& d) {
    const std::size_t n = d.size();
    auto arc = [&](std::size_t x, std::size_t y) { return d.color(x, y) == Arc::forward; };
    for (std::size_t len = 2; len <= n; ++len) {
        std::vector<std::size_t> seq(len, 0);
        while (true) {
            bool ok = true;
            std::set<std::size_t> distinct(seq.begin(), seq.end());
            if (distinct.size() != len) ok = false;
            for (std::size_t i = 0; i < len && ok; ++i) ok = arc(seq[i], seq[(i + 1) % len]);
            if (ok) return true;
            std::size_t pos = 0;
            while (pos < len && ++seq[pos] == n) seq[pos++] = 0;
            if (pos == len) break;
        }
    }
    return false;
}

std::set<SpectrumTuple> as_set(const CliqueSpectrum& s) { return {s.tuples.begin(), s.tuples.end()}; }

}  // namespace

TEST(Good, TwoBichromaticExamples) {
    const auto f = families::two_bichromatic();
    EXPECT_FALSE(is_weakly_good({0, 1, 0}, f));
    EXPECT_TRUE(is_weakly_good({0, 2, 0}, f));
    EXPECT_TRUE(is_weakly_good({1, 1, 1}, f));
}

TEST(Good, OneBichromaticStrong) {
    const auto f = families::one_bichromatic();
    EXPECT_FALSE(is_strongly_good({0, 0, 2}, f));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) EXPECT_TRUE(is_strongly_good({a, b, 3 - a - b}, f));
}

TEST(Good, ZeroTupleNeverGood) {
    for (const auto& f : {families::two_bichromatic(), families::rainbow(), families::mono_triangle(4)}) {
        SpectrumTuple zero(static_cast<std::size_t>(f.r), 0);
        EXPECT_FALSE(is_weakly_good(zero, f));
        EXPECT_FALSE(is_strongly_good(zero, f));
    }
}

TEST(Good, SingletonPartsAreAlwaysGood) {
    const auto f = families::rainbow();
    EXPECT_TRUE(is_weakly_good({3, 0, 0}, f));
    EXPECT_TRUE(is_strongly_good({0, 2, 1}, f));
    const auto d = families::forb(PaletteKind::orien, {families::cyclic_triangle()});
    EXPECT_TRUE(is_weakly_good({2, 1, 0}, d));
}

TEST(Good, DimensionAndPaletteChecks) {
    EXPECT_THROW(is_weakly_good({1, 0}, families::rainbow()), DomainError);
    const auto d = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    EXPECT_THROW(is_weakly_good({1, 0, 0}, d), DomainError);
}

TEST(Good, MatchesLabeledPartitionSearch) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = trial % 2 ? 2 : 3;
        const auto f = random_family(r, rng);
        for_each_tuple_below(f, 5, [&](const SpectrumTuple& t) {
            EXPECT_EQ(is_weakly_good(t, f), brute_good(f, t, Mode::weak));
            EXPECT_EQ(is_strongly_good(t, f), brute_good(f, t, Mode::strong));
        });
    }
}

TEST(Spectrum, Examples) {
    using S = std::set<SpectrumTuple>;
    EXPECT_EQ(as_set(clique_spectrum(families::two_bichromatic(), Mode::weak)), (S{{0, 1, 0}, {0, 0, 0}}));
    EXPECT_EQ(as_set(clique_spectrum(families::one_bichromatic(), Mode::weak)), (S{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    EXPECT_EQ(as_set(clique_spectrum(families::no_pentagon_pair(), Mode::weak)),
              (S{{2, 0}, {1, 0}, {1, 1}, {0, 2}, {0, 1}, {0, 0}}));
    EXPECT_TRUE(clique_spectrum(families::one_bichromatic(), Mode::strong).contains({0, 0, 2}));
}

TEST(Chromatic, Examples) {
    EXPECT_EQ(chromatic_number(families::two_bichromatic(), Mode::weak).chi, 2);
    EXPECT_EQ(chromatic_number(families::two_bichromatic(), Mode::strong).chi, 2);
    EXPECT_EQ(chromatic_number(families::one_bichromatic(), Mode::weak).chi, 2);
    EXPECT_EQ(chromatic_number(families::one_bichromatic(), Mode::strong).chi, 3);
    EXPECT_EQ(chromatic_number(families::no_pentagon_pair(), Mode::weak).chi, 3);
}

TEST(Chromatic, TrivialWhenOnlyZeroSurvives) {
    const auto f = families::forb(PaletteKind::tourn, {families::transitive_tournament(4)});
    const auto c = chromatic_number(f, Mode::strong);
    EXPECT_TRUE(c.trivial);
    EXPECT_EQ(c.chi, 1);
    const auto one = families::forb(2, {ColoredGraph(1, 2, 1)});
    EXPECT_TRUE(chromatic_number(one, Mode::weak).trivial);
    EXPECT_FALSE(chromatic_number(families::rainbow(), Mode::weak).trivial);
}

TEST(SpectrumInvariants, DownsetBoundAndWeakBelowStrong) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_family(trial % 3 + 2, rng);
        const auto weak = clique_spectrum(f, Mode::weak);
        const auto strong = clique_spectrum(f, Mode::strong);
        for (const auto* s : {&weak, &strong}) {
            for (const auto& t : s->tuples) {
                EXPECT_LT(static_cast<std::size_t>(tuple_sum(t)), min_forbidden_size(f));
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (t[i] == 0) continue;
                    auto lower = t;
                    --lower[i];
                    EXPECT_TRUE(s->contains(lower));
                }
            }
        }
        EXPECT_LE(chi_of(weak), chi_of(strong));
        // a weakly good tuple stays good when raised
        for_each_tuple_below(f, min_forbidden_size(f), [&](const SpectrumTuple& t) {
            if (!is_weakly_good(t, f)) return;
            for (std::size_t i = 0; i < t.size(); ++i) {
                auto up = t;
                ++up[i];
                EXPECT_TRUE(is_weakly_good(up, f));
            }
        });
    }
}

// With two colors, "no edge of color 1" and "clique of color 2" coincide,
// so the weak and strong spectra agree after swapping the two coordinates.
TEST(SpectrumInvariants, TwoColorsWeakIsStrongSwapped) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_family(2, rng);
        std::set<SpectrumTuple> swapped;
        for (const auto& t : clique_spectrum(f, Mode::strong).tuples) swapped.insert({t[1], t[0]});
        EXPECT_EQ(as_set(clique_spectrum(f, Mode::weak)), swapped);
        EXPECT_EQ(chromatic_number(f, Mode::weak).chi, chromatic_number(f, Mode::strong).chi);
    }
}

TEST(SpectrumInvariants, UndirAndTournChromaticNumbersAgree) {
    std::mt19937_64 rng(14);
    for (auto kind : {PaletteKind::undir, PaletteKind::tourn}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto pal = Palette::of(kind);
            std::vector<DiGraph> hs{random_digraph(3 + trial % 2, pal.allowed, rng)};
            const auto f = families::forb(kind, hs);
            EXPECT_EQ(chromatic_number(f, Mode::weak).chi, chromatic_number(f, Mode::strong).chi);
        }
    }
}

TEST(Acyclic, Examples) {
    EXPECT_TRUE(is_acyclic(families::transitive_triangle()));
    EXPECT_FALSE(is_acyclic(families::cyclic_triangle()));
    EXPECT_TRUE(is_acyclic(DiGraph(4, 4, Arc::both)));
}

TEST(Acyclic, MatchesSequenceEnumeration) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 150; ++trial) {
        auto d = random_digraph(6, 0b1111, rng);
        EXPECT_EQ(is_acyclic(d), !brute_has_cycle(d));
    }
}

TEST(Transitive, Examples) {
    EXPECT_TRUE(is_transitive_tournament(DiGraph(1, 4, Arc::none)));
    EXPECT_FALSE(is_transitive_tournament(families::cyclic_triangle()));
    EXPECT_FALSE(is_transitive_tournament(digraph(3, {Arc::forward, Arc::both, Arc::forward})));
    EXPECT_TRUE(is_transitive_tournament(families::transitive_tournament(5)));
    EXPECT_FALSE(is_transitive_tournament(families::paley7()));
}
