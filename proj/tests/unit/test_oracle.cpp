#include "edk/families.hpp"
#include "edk/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

using namespace edk;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// tries every recoloring of the pairs, keeps the closest member
template <class Kind>
std::size_t brute_dist(const CompleteGraph<Kind>& g, const Family<Kind>& family) {
    std::vector<typename Kind::color_type> colors;
    if constexpr (Kind::directed) {
        for (unsigned i = 0; i < 4; ++i)
            if (family.palette.allows(static_cast<Arc>(i))) colors.push_back(static_cast<Arc>(i));
    } else {
        for (int c = 1; c <= family.r; ++c) colors.push_back(static_cast<std::uint8_t>(c));
    }
    const std::size_t m = g.num_pairs();
    std::vector<std::size_t> digit(m, 0);
    std::size_t best = m + 1;
    while (true) {
        std::vector<typename Kind::color_type> upper;
        for (auto d : digit) upper.push_back(colors[d]);
        const auto h = from_upper_triangle<Kind>(g.size(), g.num_colors(), upper);
        if (is_member(h, family)) best = std::min(best, hamming(g, h));
        std::size_t pos = 0;
        while (pos < m && ++digit[pos] == colors.size()) digit[pos++] = 0;
        if (pos == m) return best;
    }
}

double frequency_z(std::size_t hits, std::size_t total, double p) {
    const double n = static_cast<double>(total);
    if (p == 0 || p == 1) return static_cast<double>(hits) == p * n ? 0 : 1e9;
    return std::abs(static_cast<double>(hits) - p * n) / std::sqrt(n * p * (1 - p));
}

}  // namespace

TEST(ExactDist, Examples) {
    const auto f = families::mono_triangle(2);
    EXPECT_EQ(exact_dist(monochromatic(3, 2, 1), f).edits, 1u);
    const auto k4 = exact_dist(monochromatic(4, 2, 1), f);
    EXPECT_EQ(k4.edits, 2u);
    EXPECT_EQ(brute_dist(monochromatic(4, 2, 1), f), 2u);
    EXPECT_TRUE(is_member(k4.witness, f));
    EXPECT_EQ(hamming(k4.witness, monochromatic(4, 2, 1)), 2u);
    EXPECT_EQ(exact_dist(monochromatic(5, 2, 2), f).edits, 0u);
}

TEST(ExactDist, MatchesExhaustiveRecoloring) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = sample_rgraph(5, DensityVector::uniform(2), seed);
        for (const auto& f : {families::mono_triangle(2), families::forb(2, {families::triangle(2, 1, 1, 2)})}) {
            const auto e = exact_dist(g, f);
            EXPECT_EQ(e.edits, brute_dist(g, f));
            EXPECT_TRUE(is_member(e.witness, f));
            EXPECT_EQ(hamming(g, e.witness), e.edits);
        }
    }
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto g = sample_rgraph(4, DensityVector::uniform(3), seed);
        for (const auto& f : {families::rainbow(), families::two_bichromatic()}) {
            EXPECT_EQ(exact_dist(g, f).edits, brute_dist(g, f));
        }
    }
}

TEST(ExactDist, DirectedMatchesExhaustiveRecoloring) {
    const auto tourn = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    const auto orien = families::forb(PaletteKind::orien, {families::cyclic_triangle(), families::transitive_triangle()});
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto t = sample_digraph(5, DirDensity(0, q(1, 2), tourn.palette), seed);
        EXPECT_EQ(exact_dist(t, tourn).edits, brute_dist(t, tourn));
        const auto o = sample_digraph(4, DirDensity(0, q(1, 3), orien.palette), seed);
        const auto e = exact_dist(o, orien);
        EXPECT_EQ(e.edits, brute_dist(o, orien));
        EXPECT_TRUE(is_member(e.witness, orien));
    }
}

TEST(ExactDist, NeverAboveAnEditorRun) {
    const auto f = families::one_bichromatic();
    const auto p = DensityVector::uniform(3);
    const auto types = enumerate_types(f, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = sample_rgraph(7, p, seed);
        const auto exact = exact_dist(g, f).edits;
        const auto& K = types[seed * 7 % types.size()];
        std::vector<Rational> w(K.size(), Rational(1, static_cast<long>(K.size())));
        EXPECT_LE(exact, edit_by_type(g, K, w, seed).changes);
    }
}

TEST(ExactDist, GuardAndOverride) {
    const auto f = families::mono_triangle(2);
    EXPECT_THROW(exact_dist(monochromatic(10, 2, 2), f), DomainError);
    EXPECT_THROW(exact_dist(DiGraph(9, 4, Arc::none), families::forb(PaletteKind::full, {families::cyclic_triangle()})), DomainError);
    ::setenv("EDK_GUARD_N", "10", 1);
    EXPECT_EQ(oracle_guard<Multicolor>(), 10u);
    EXPECT_EQ(exact_dist(monochromatic(10, 2, 2), f).edits, 0u);
    ::unsetenv("EDK_GUARD_N");
    EXPECT_EQ(oracle_guard<Multicolor>(), 9u);
    EXPECT_EQ(oracle_guard<Directed>(), 8u);
}

TEST(Sampler, Degenerate) {
    EXPECT_EQ(sample_rgraph(6, DensityVector({1, 0, 0}), 3), monochromatic(6, 3, 1));
    const auto t = sample_digraph(7, DirDensity(0, q(1, 2), Palette::of(PaletteKind::tourn)), 4);
    for (auto c : t.pairs()) EXPECT_TRUE(c == Arc::forward || c == Arc::backward);
    const auto u = sample_digraph(7, DirDensity(q(1, 3), 0, Palette::of(PaletteKind::undir)), 4);
    for (auto c : u.pairs()) EXPECT_TRUE(c == Arc::none || c == Arc::both);
}

TEST(Sampler, Reproducible) {
    const auto p = DensityVector({q(1, 5), q(3, 5), q(1, 5)});
    EXPECT_EQ(sample_rgraph(20, p, 99), sample_rgraph(20, p, 99));
    EXPECT_NE(sample_rgraph(20, p, 99), sample_rgraph(20, p, 100));
}

TEST(Sampler, ColorFrequencies) {
    const auto p = DensityVector({q(1, 2), q(1, 3), q(1, 6)});
    const auto g = sample_rgraph(142, p, 5);  // 10011 pairs
    std::array<std::size_t, 3> counts{};
    for (auto c : g.pairs()) ++counts[c - 1];
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(frequency_z(counts[i], g.num_pairs(), p[i].get_d()), 3.0);

    const auto d = DirDensity(q(1, 5), q(1, 5), Palette::of(PaletteKind::full));
    const auto h = sample_digraph(142, d, 6);
    std::array<std::size_t, 4> dc{};
    for (auto c : h.pairs()) ++dc[Directed::index(c)];
    const double expect[4] = {0.4, 0.2, 0.2, 0.2};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(frequency_z(dc[i], h.num_pairs(), expect[i]), 3.0);
}

TEST(Estimate, NothingForbiddenFitsGivesZero) {
    const auto f = families::forb(3, {monochromatic(9, 3, 1)});
    const auto s = estimate_dist(6, DensityVector::uniform(3), f, 10, 1, 1, EstimateMode::exact);
    EXPECT_EQ(s.trials, 10u);
    EXPECT_EQ(s.mean, 0);
    EXPECT_EQ(s.max, 0);
}

TEST(Estimate, RainbowStaysBelowTheLimit) {
    const auto f = families::rainbow();
    const auto s = estimate_dist(7, DensityVector::uniform(3), f, 30, 2, 1, EstimateMode::exact);
    EXPECT_LE(s.mean, 1.0 / 3);
    EXPECT_GT(s.mean, 0);
}

TEST(Estimate, AlgorithmicDominatesExactOnPairedSeeds) {
    const auto f = families::one_bichromatic();
    const auto p = DensityVector::uniform(3);
    const auto exact = estimate_dist(7, p, f, 20, 3, 2, EstimateMode::exact);
    const auto algo = estimate_dist(7, p, f, 20, 3, 2, EstimateMode::algorithmic);
    for (std::size_t t = 0; t < 20; ++t) EXPECT_LE(exact.samples[t], algo.samples[t]);
    EXPECT_LE(exact.mean, algo.mean);
}

TEST(Estimate, JobsDoNotChangeSamples) {
    const auto f = families::rainbow();
    const auto p = DensityVector::uniform(3);
    const auto a = estimate_dist(6, p, f, 12, 4, 1, EstimateMode::exact, 1);
    const auto b = estimate_dist(6, p, f, 12, 4, 1, EstimateMode::exact, 4);
    EXPECT_EQ(a.samples, b.samples);
}

TEST(Estimate, Guards) {
    const auto f = families::rainbow();
    EXPECT_THROW(estimate_dist(12, DensityVector::uniform(3), f, 1, 1, 1, EstimateMode::exact), DomainError);
    EXPECT_NO_THROW(estimate_dist(12, DensityVector::uniform(3), f, 1, 1, 1, EstimateMode::algorithmic));
    EXPECT_THROW(estimate_dist(1, DensityVector::uniform(3), f, 1, 1, 1, EstimateMode::exact), DomainError);
}
