#include "edk/distfun.hpp"
#include "edk/families.hpp"
#include "edk/property_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edk;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

DensityVector dv(std::initializer_list<Rational> p) { return DensityVector(std::vector<Rational>(p)); }

DensityVector random_density(int r, long den, std::mt19937_64& rng) {
    std::vector<long> cuts{0, den};
    std::uniform_int_distribution<long> pick(0, den);
    for (int i = 0; i + 1 < r; ++i) cuts.push_back(pick(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> p;
    for (std::size_t i = 1; i < cuts.size(); ++i) p.push_back(q(cuts[i] - cuts[i - 1], den));
    return DensityVector(p);
}

Rational max_entry(const DensityVector& p) {
    Rational m = p[0];
    for (const auto& x : p.entries()) m = std::max(m, x);
    return m;
}

Rational min_entry(const DensityVector& p) {
    Rational m = p[0];
    for (const auto& x : p.entries()) m = std::min(m, x);
    return m;
}

}  // namespace

TEST(MMatrix, Examples) {
    RType one(1, 0b11);
    one.set_vertex(0, 0b01);
    EXPECT_EQ(m_matrix(one, dv({q(1, 3), q(2, 3)}))(0, 0), q(2, 3));

    RType two(2, 0b11);
    two.set_vertex(0, 0b10);
    two.set_vertex(1, 0b10);
    two.set_pair(0, 1, 0b11);
    const auto p = dv({q(2, 5), q(3, 5)});
    const auto M = m_matrix(two, p);
    EXPECT_EQ(M(0, 0), q(2, 5));
    EXPECT_EQ(M(1, 1), q(2, 5));
    EXPECT_EQ(M(0, 1), 0);
    EXPECT_TRUE(M.is_symmetric());
    EXPECT_EQ(f_value(M), q(1, 5));
    EXPECT_EQ(g_value(M).value, q(1, 5));
}

TEST(MMatrix, ZeroExactlyOnFullSets) {
    const auto p = dv({q(1, 5), q(1, 2), q(3, 10)});
    for (ColorSet s = 1; s < 8; ++s) {
        RType K(2, 0b111);
        K.set_vertex(0, 0b001);
        K.set_vertex(1, 0b001);
        K.set_pair(0, 1, s);
        EXPECT_EQ(m_matrix(K, p)(0, 1) == 0, s == 0b111);
    }
}

TEST(MMatrixDir, Examples) {
    const auto tourn = Palette::of(PaletteKind::tourn);
    const DirDensity half(0, q(1, 2), tourn);
    DirType arrow(1, tourn.allowed);
    arrow.set_vertex(0, 0b0100);
    EXPECT_EQ(m_matrix_dir(arrow, half)(0, 0), q(1, 2));
    DirType both(2, tourn.allowed);
    both.set_vertex(0, 0b0100);
    both.set_vertex(1, 0b0100);
    both.set_pair(0, 1, 0b1100);
    EXPECT_EQ(m_matrix_dir(both, half)(0, 1), 0);
}

TEST(MMatrixDir, UndirMatchesTwoColors) {
    const auto undir = Palette::of(PaletteKind::undir);
    const DirDensity d(q(1, 3), 0, undir);
    const auto p = dv({q(2, 3), q(1, 3)});  // color 1 = o, color 2 = -
    for (ColorSet a : {0b01, 0b10})
        for (ColorSet b : {0b01, 0b10})
            for (ColorSet e : {0b01, 0b10, 0b11}) {
                DirType D(2, undir.allowed);
                RType R(2, 0b11);
                D.set_vertex(0, static_cast<ColorSet>(a));
                R.set_vertex(0, static_cast<ColorSet>(a));
                D.set_vertex(1, static_cast<ColorSet>(b));
                R.set_vertex(1, static_cast<ColorSet>(b));
                D.set_pair(0, 1, static_cast<ColorSet>(e));
                R.set_pair(0, 1, static_cast<ColorSet>(e));
                EXPECT_EQ(m_matrix_dir(D, d), m_matrix(R, p));
            }
}

TEST(MMatrixDir, FormulaWithBothArrows) {
    const auto full = Palette::of(PaletteKind::full);
    const DirDensity d(q(1, 5), q(1, 5), full);  // o = 2/5
    DirType K(1, full.allowed);
    K.set_vertex(0, 0b1101);  // o and both arrows
    EXPECT_EQ(m_matrix_dir(K, d)(0, 0), 1 - q(2, 5) - 2 * q(1, 5));
}

TEST(FValue, CliqueTypeForTournaments) {
    // l vertices carrying "->", all pairs carrying both arrows
    const auto tourn = Palette::of(PaletteKind::tourn);
    const DirDensity half(0, q(1, 2), tourn);
    for (std::size_t ell = 1; ell <= 4; ++ell) {
        DirType K(ell, tourn.allowed);
        for (std::size_t i = 0; i < ell; ++i) K.set_vertex(i, 0b0100);
        EXPECT_EQ(f_value(m_matrix_dir(K, half)), Rational(1, 2 * static_cast<long>(ell)));
        EXPECT_EQ(g_value(m_matrix_dir(K, half)).value, Rational(1, 2 * static_cast<long>(ell)));
    }
}

TEST(DistUpper, TriangleExamples) {
    const auto uniform = DensityVector::uniform(3);
    EXPECT_EQ(dist_upper(families::rainbow(), uniform, 1).value, q(1, 3));
    EXPECT_EQ(dist_upper(families::all_bichromatic(), uniform, 1).value, q(2, 3));
    EXPECT_EQ(dist_upper(families::mono_triangle(2), dv({1, 0}), 2).value, q(1, 2));
}

TEST(DistUpper, CertificateRecomputes) {
    const auto p = dv({q(1, 2), q(1, 3), q(1, 6)});
    for (const auto& f : {families::rainbow(), families::one_bichromatic(), families::two_mono_triangles()}) {
        const auto b = dist_upper(f, p, 2);
        ASSERT_TRUE(b.type.has_value());
        EXPECT_TRUE(in_admissible_set(*b.type, f));
        EXPECT_EQ(quadratic_form(m_matrix(*b.type, p), b.weights), b.value);
        EXPECT_EQ(b.kmax, 2u);
    }
}

TEST(DistUpper, JobsDoNotChangeTheAnswer) {
    const auto f = families::one_bichromatic();
    const auto p = dv({q(1, 4), q(1, 4), q(1, 2)});
    const auto a = dist_upper(f, p, 2, 1);
    const auto b = dist_upper(f, p, 2, 4);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(*a.type, *b.type);
    EXPECT_EQ(a.weights, b.weights);
}

TEST(DistUpper, NonIncreasingInKmax) {
    std::mt19937_64 rng(42);
    for (const auto& f : {families::one_bichromatic(), families::two_mono_triangles(), families::rainbow()}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto p = random_density(3, 12, rng);
            EXPECT_GE(dist_upper(f, p, 1).value, dist_upper(f, p, 2).value);
        }
    }
    const auto pent = families::no_pentagon_pair();
    const auto p = dv({q(1, 2), q(1, 2)});
    EXPECT_GE(dist_upper(pent, p, 2).value, dist_upper(pent, p, 3).value);
}

TEST(DistUpper, ConcaveAlongSegments) {
    std::mt19937_64 rng(43);
    const auto f = families::one_bichromatic();
    const auto types = enumerate_types(f, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_density(3, 12, rng), b = random_density(3, 12, rng);
        const auto va = dist_upper(types, a, 2).value, vb = dist_upper(types, b, 2).value;
        for (const Rational& t : {q(1, 4), q(1, 2), q(3, 4)}) {
            std::vector<Rational> mid;
            for (std::size_t i = 0; i < 3; ++i) mid.push_back(t * a[i] + (1 - t) * b[i]);
            EXPECT_GE(dist_upper(types, DensityVector(mid), 2).value, t * va + (1 - t) * vb);
        }
    }
}

TEST(DistUpper, RejectsWrongDensity) {
    EXPECT_THROW(dist_upper(families::rainbow(), DensityVector::uniform(2), 1), DomainError);
    const auto f = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    EXPECT_THROW(dist_upper(f, DirDensity(0, q(1, 4), Palette::of(PaletteKind::orien)), 1), DomainError);
}

TEST(Turan, Examples) {
    // r=3, chi_strong=2: 1/(3*1)
    EXPECT_EQ(dist_lower_turan(families::two_bichromatic()).value, q(1, 3));
    const auto tourn = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    EXPECT_EQ(dist_lower_turan(tourn).value, q(1, 2));
    // two colors: 1/(2(chi-1)), chi = 3 for the pentagon pair
    EXPECT_EQ(dist_lower_turan(families::no_pentagon_pair()).value, q(1, 4));
    // full palette: (2,0,0) is not good, so chi_strong = 3
    EXPECT_EQ(dist_lower_turan(families::forb(PaletteKind::full, {families::cyclic_triangle()})).value, q(1, 8));
    EXPECT_THROW(dist_lower_turan(families::forb(PaletteKind::tourn, {families::transitive_tournament(4)})), DomainError);
}

TEST(Sandwich, LowerBelowMaxBelowWeakChi) {
    for (const auto& f : {families::two_bichromatic(), families::one_bichromatic(), families::rainbow(),
                          families::all_bichromatic(), families::mono_triangle(3), families::no_pentagon_pair()}) {
        const auto lower = dist_lower_turan(f).value;
        const auto upper = dist_max_upper(f, 2).bound.value;
        const int chiw = chromatic_number(f, Mode::weak).chi;
        EXPECT_LE(lower, upper) << format_family(f);
        // the weak bound needs chi_weak >= 2 (all bichromatic has chi_weak = 1)
        if (chiw >= 2) {
            EXPECT_LE(upper, q(1, chiw - 1)) << format_family(f);
        }
    }
}

TEST(DistMax, Examples) {
    const auto six = dist_max_upper(families::all_bichromatic(), 1);
    EXPECT_EQ(six.bound.value, q(2, 3));
    EXPECT_EQ(six.argmax, DensityVector::uniform(3));
    const auto rainbow = dist_max_upper(families::rainbow(), 1);
    EXPECT_EQ(rainbow.bound.value, q(1, 3));
    EXPECT_EQ(rainbow.argmax, DensityVector::uniform(3));
    const auto tourn = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    EXPECT_EQ(dist_max_upper(tourn, 2).bound.value, dist_upper(tourn, DirDensity(0, q(1, 2), tourn.palette), 2).value);
}

TEST(DistMax, MonoTriangle) {
    const auto m = dist_max_upper(families::mono_triangle(3), 2);
    EXPECT_EQ(m.bound.value, q(1, 2));
    EXPECT_EQ(m.argmax, dv({1, 0, 0}));
}

TEST(DistMax, DominatesEveryGridValue) {
    for (const auto& f : {families::one_bichromatic(), families::rainbow()}) {
        const auto m = dist_max_upper(f, 1);
        for (const auto& row : distfn_grid(f, 1, 6)) EXPECT_LE(row.value, m.bound.value);
    }
}

TEST(Symmetric, Examples) {
    EXPECT_EQ(symmetric_bound(families::no_pentagon_pair()), q(1, 4));
    EXPECT_EQ(symmetric_bound(families::rainbow()), q(1, 3));
    EXPECT_THROW(symmetric_bound(families::two_bichromatic()), DomainError);
}

TEST(Grid, SixBichromaticIsOneMinusMax) {
    for (const auto& row : distfn_grid(families::all_bichromatic(), 1, 6)) EXPECT_EQ(row.value, 1 - max_entry(row.p));
}

TEST(Grid, RainbowIsTheSmallestDensity) {
    for (const auto& row : distfn_grid(families::rainbow(), 1, 6)) EXPECT_EQ(row.value, min_entry(row.p));
    EXPECT_EQ(dist_upper(families::rainbow(), dv({q(1, 2), q(1, 4), q(1, 4)}), 2).value, q(1, 4));
}

TEST(Grid, CornersNeedNoEdits) {
    // with one color only, a property avoiding a bichromatic triangle costs nothing
    for (const auto& row : distfn_grid(families::one_bichromatic(), 2, 1)) EXPECT_EQ(row.value, 0);
    // a monochromatic triangle in color 1 costs 1/2 at the color-1 corner and 0 elsewhere
    for (const auto& row : distfn_grid(families::mono_triangle(2), 2, 1))
        EXPECT_EQ(row.value, row.p[0] == 1 ? q(1, 2) : q(0));
}

TEST(Grid, Shapes) {
    EXPECT_EQ(density_grid(3, 4).size(), 15u);
    EXPECT_EQ(dir_density_grid(Palette::of(PaletteKind::tourn), 10).size(), 1u);
    for (const auto& d : dir_density_grid(Palette::of(PaletteKind::compl_), 6)) EXPECT_EQ(d.p + 2 * d.q, 1);
    EXPECT_THROW(density_grid(3, 0), DomainError);
}
