#ifndef EDK_VERIFY_HPP
#define EDK_VERIFY_HPP

// Built-in reproduction cases: spectra of the worked examples, triangle
// properties of 3-graphs, tournaments and triangle properties of digraphs.

#include "edk/distfun.hpp"
#include "edk/families.hpp"
#include "edk/spectrum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace edk {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct CaseReport {
    std::string id;
    std::vector<Check> checks;
    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

namespace detail {

inline std::string tuples_string(const std::vector<SpectrumTuple>& ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) out += ",";
        out += "(";
        for (std::size_t j = 0; j < ts[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(ts[i][j]);
        }
        out += ")";
    }
    return out + "}";
}

template <class Kind>
void check_spectrum(CaseReport& rep, const std::string& name, const Family<Kind>& f, Mode mode, std::vector<SpectrumTuple> want) {
    auto s = clique_spectrum(f, mode);
    std::sort(want.begin(), want.end(), std::greater<>());
    rep.checks.push_back({name, tuples_string(want), tuples_string(s.tuples), s.tuples == want});
}

inline void check_int(CaseReport& rep, const std::string& name, long want, long got) {
    rep.checks.push_back({name, std::to_string(want), std::to_string(got), want == got});
}

inline void check_value(CaseReport& rep, const std::string& name, const Rational& want, const Rational& got) {
    rep.checks.push_back({name, to_string(want), to_string(got), want == got});
}

inline void check_flag(CaseReport& rep, const std::string& name, bool want, bool got) {
    rep.checks.push_back({name, want ? "true" : "false", got ? "true" : "false", want == got});
}

inline DirDensity half_arcs(PaletteKind k) { return DirDensity(0, Rational(1, 2), Palette::of(k)); }

/// (M w) is constant on the support of w and equals the value: the optimality
/// structure used for single directed triangles. Also no zero diagonal entry.
inline bool directed_triangle_certificate(const DistBound<Directed>& b, const DirDensity& d) {
    const auto M = m_matrix_dir(*b.type, d);
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (M(i, i) == 0) return false;
        if (b.weights[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < M.size(); ++j) row += M(i, j) * b.weights[j];
        if (row != b.value) return false;
    }
    return true;
}

}  // namespace detail

inline CaseReport verify_example_spectra() {
    using namespace families;
    CaseReport rep{"example-spectra", {}};
    const auto e1 = two_bichromatic();
    detail::check_spectrum(rep, "no 112/223 triangles: weak spectrum", e1, Mode::weak, {{0, 1, 0}, {0, 0, 0}});
    detail::check_spectrum(rep, "no 112/223 triangles: strong spectrum", e1, Mode::strong, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    detail::check_int(rep, "no 112/223 triangles: weak chi", 2, chromatic_number(e1, Mode::weak).chi);
    detail::check_int(rep, "no 112/223 triangles: strong chi", 2, chromatic_number(e1, Mode::strong).chi);

    const auto e2 = one_bichromatic();
    detail::check_spectrum(rep, "no 112 triangle: weak spectrum", e2, Mode::weak, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    detail::check_int(rep, "no 112 triangle: weak chi", 2, chromatic_number(e2, Mode::weak).chi);
    detail::check_int(rep, "no 112 triangle: strong chi", 3, chromatic_number(e2, Mode::strong).chi);
    detail::check_flag(rep, "no 112 triangle: (0,0,2) in strong spectrum", true, clique_spectrum(e2, Mode::strong).contains({0, 0, 2}));

    const auto e3 = no_pentagon_pair();
    detail::check_spectrum(rep, "no pentagon pair: spectrum", e3, Mode::weak, {{2, 0}, {1, 0}, {1, 1}, {0, 2}, {0, 1}, {0, 0}});
    detail::check_int(rep, "no pentagon pair: chi", 3, chromatic_number(e3, Mode::weak).chi);
    return rep;
}

inline CaseReport verify_triangles(unsigned jobs = 1) {
    using namespace families;
    CaseReport rep{"triangles", {}};
    const auto p1 = DensityVector({1, 0, 0});
    const auto p12 = DensityVector({Rational(1, 2), Rational(1, 2), 0});
    const auto u = DensityVector::uniform(3);
    detail::check_value(rep, "mono triangle at (1,0,0)", Rational(1, 2), dist_upper(mono_triangle(3), p1, 3, jobs).value);
    detail::check_value(rep, "112 triangle at (1/2,1/2,0)", Rational(1, 2), dist_upper(one_bichromatic(), p12, 3, jobs).value);
    detail::check_value(rep, "two mono triangles at (1/2,1/2,0)", Rational(1, 2), dist_upper(two_mono_triangles(), p12, 3, jobs).value);
    detail::check_value(rep, "six bichromatic triangles at uniform p", Rational(2, 3), dist_upper(all_bichromatic(), u, 3, jobs).value);
    detail::check_value(rep, "rainbow triangle at uniform p", Rational(1, 3), dist_upper(rainbow(), u, 3, jobs).value);

    // the maximum over all densities, from the linear program
    detail::check_value(rep, "mono triangle: max over densities", Rational(1, 2), dist_max_upper(mono_triangle(3), 2).bound.value);
    detail::check_value(rep, "112 triangle: max over densities", Rational(1, 2), dist_max_upper(one_bichromatic(), 2).bound.value);
    detail::check_value(rep, "two mono triangles: max over densities", Rational(1, 2), dist_max_upper(two_mono_triangles(), 2).bound.value);
    detail::check_value(rep, "six bichromatic: max over densities", Rational(2, 3), dist_max_upper(all_bichromatic(), 2).bound.value);
    detail::check_value(rep, "rainbow: max over densities", Rational(1, 3), dist_max_upper(rainbow(), 2).bound.value);

    // whole functions on the 1/12 grid
    bool bichromatic_ok = true, rainbow_ok = true;
    for (const auto& row : distfn_grid(all_bichromatic(), 2, 12, jobs)) {
        const auto& e = row.p.entries();
        if (row.value != 1 - std::max({e[0], e[1], e[2]})) bichromatic_ok = false;
    }
    for (const auto& row : distfn_grid(rainbow(), 2, 12, jobs)) {
        const auto& e = row.p.entries();
        if (row.value != std::min({e[0], e[1], e[2]})) rainbow_ok = false;
    }
    detail::check_flag(rep, "six bichromatic: value 1-max(p) on the 1/12 grid", true, bichromatic_ok);
    detail::check_flag(rep, "rainbow: value min(p) on the 1/12 grid", true, rainbow_ok);
    return rep;
}

inline CaseReport verify_tournament_triangle() {
    CaseReport rep{"tournament-triangle", {}};
    const auto f = families::forb(PaletteKind::tourn, {families::cyclic_triangle()});
    detail::check_int(rep, "cyclic triangle, tournaments: chi", 2, chromatic_number(f, Mode::strong).chi);
    detail::check_value(rep, "cyclic triangle, tournaments: dist", Rational(1, 2),
                        dist_upper(f, detail::half_arcs(PaletteKind::tourn), 1).value);
    return rep;
}

inline CaseReport verify_transitive_trivial() {
    CaseReport rep{"transitive-tourn-trivial", {}};
    const auto f = families::forb(PaletteKind::tourn, {families::transitive_triangle()});
    detail::check_flag(rep, "transitive triangle, tournaments: trivial", true, chromatic_number(f, Mode::strong).trivial);
    return rep;
}

/// dist = 1/(2(chi-1)) for nontrivial tournament properties.
inline CaseReport verify_tournaments() {
    CaseReport rep{"tournaments", {}};
    const auto half = detail::half_arcs(PaletteKind::tourn);
    struct Item {
        std::string name;
        DirectedFamily family;
        std::size_t kmax;
    };
    const std::vector<Item> items = {
        {"cyclic triangle", families::forb(PaletteKind::tourn, {families::cyclic_triangle()}), 1},
        {"quadratic-residue tournament on 7", families::forb(PaletteKind::tourn, {families::paley7()}), 2},
    };
    for (const auto& it : items) {
        const auto chi = chromatic_number(it.family, Mode::strong);
        detail::check_flag(rep, it.name + ": nontrivial", false, chi.trivial);
        const Rational want(1, 2 * (chi.chi - 1));
        detail::check_value(rep, it.name + ": dist = 1/(2(chi-1)), chi=" + std::to_string(chi.chi), want,
                            dist_upper(it.family, half, it.kmax).value);
        detail::check_value(rep, it.name + ": Turan bound", want, dist_lower_turan(it.family).value);
    }
    const auto tt4 = families::forb(PaletteKind::tourn, {families::transitive_tournament(4)});
    detail::check_flag(rep, "transitive tournament on 4: trivial", true, chromatic_number(tt4, Mode::strong).trivial);
    return rep;
}

inline CaseReport verify_directed_triangles() {
    using families::cyclic_triangle;
    using families::transitive_triangle;
    CaseReport rep{"directed-triangles", {}};
    const Rational half(1, 2);
    for (auto k : {PaletteKind::full, PaletteKind::compl_, PaletteKind::orien, PaletteKind::tourn}) {
        const auto f = families::forb(k, {cyclic_triangle()});
        const auto d = detail::half_arcs(k);
        const auto b = dist_upper(f, d, 1);
        const std::string tag = "cyclic triangle, palette " + palette_name(k);
        detail::check_value(rep, tag + ": dist at (0,1/2)", half, b.value);
        detail::check_flag(rep, tag + ": certificate (Mw constant, no zero diagonal)", true, detail::directed_triangle_certificate(b, d));
        detail::check_value(rep, tag + ": max over densities", half, dist_max_upper(f, 2).bound.value);
    }
    detail::check_flag(rep, "transitive triangle, palette tourn: trivial", true,
                       chromatic_number(families::forb(PaletteKind::tourn, {transitive_triangle()}), Mode::strong).trivial);
    for (auto k : {PaletteKind::full, PaletteKind::compl_, PaletteKind::orien}) {
        const auto f3 = families::forb(k, {transitive_triangle()});
        detail::check_value(rep, "transitive triangle, palette " + palette_name(k) + ": max over densities", half,
                            dist_max_upper(f3, 2).bound.value);
        const auto f4 = families::forb(k, {transitive_triangle(), cyclic_triangle()});
        detail::check_value(rep, "both triangles, palette " + palette_name(k) + ": max over densities", half,
                            dist_max_upper(f4, 2).bound.value);
    }
    return rep;
}

inline const std::vector<std::string>& verify_case_ids() {
    static const std::vector<std::string> ids = {"example-spectra", "triangles", "tournament-triangle", "transitive-tourn-trivial",
                                                 "tournaments", "directed-triangles"};
    return ids;
}

/// Runs one case, or every case for "all".
inline std::vector<CaseReport> verify_paper(const std::string& id, unsigned jobs = 1) {
    std::vector<CaseReport> out;
    auto run = [&](const std::string& c) {
        if (c == "example-spectra") out.push_back(verify_example_spectra());
        else if (c == "triangles") out.push_back(verify_triangles(jobs));
        else if (c == "tournament-triangle") out.push_back(verify_tournament_triangle());
        else if (c == "transitive-tourn-trivial") out.push_back(verify_transitive_trivial());
        else if (c == "tournaments") out.push_back(verify_tournaments());
        else if (c == "directed-triangles") out.push_back(verify_directed_triangles());
        else throw DomainError("unknown case '" + c + "'");
    };
    if (id == "all") {
        for (const auto& c : verify_case_ids()) run(c);
    } else {
        run(id);
    }
    return out;
}

}  // namespace edk

#endif  // EDK_VERIFY_HPP
