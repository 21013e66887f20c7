#ifndef EDK_DISTFUN_HPP
#define EDK_DISTFUN_HPP

#include "edk/graph.hpp"
#include "edk/lp.hpp"
#include "edk/parallel.hpp"
#include "edk/qp.hpp"
#include "edk/spectrum.hpp"
#include "edk/types.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

namespace edk {

template <class Kind>
using Density = std::conditional_t<Kind::directed, DirDensity, DensityVector>;

// ---------------------------------------------------------------------------
// M_K(p)

/// entry(i,j) = 1 - sum of the weights of the colors in phi(u_i, u_j).
template <class Kind>
RationalMatrix m_matrix(const Type<Kind>& K, const ColorWeights& weights) {
    const std::size_t k = K.size();
    RationalMatrix M(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational covered = 0;
            const ColorSet s = K.at(i, j);
            for (unsigned c = 0; c < 8; ++c) {
                if (contains(s, c)) covered += weights[c];
            }
            M(i, j) = 1 - covered;
        }
    }
    return M;
}

inline RationalMatrix m_matrix(const RType& K, const DensityVector& p) {
    if (!K.size() || p.r() != popcount(K.universe())) throw DomainError("density length does not match the type");
    return m_matrix(K, color_weights(p));
}

/// M = J - (1-p-2q) A_o - p A_- - q A_arrows, with A_arrows counting arrows in phi.
inline RationalMatrix m_matrix_dir(const DirType& K, const DirDensity& d) {
    if ((K.universe() & ~d.palette.allowed) != 0) throw DomainError("type uses colors outside the density's palette");
    return m_matrix(K, color_weights(d));
}

inline RationalMatrix m_matrix(const DirType& K, const DirDensity& d) { return m_matrix_dir(K, d); }

/// Expected number of recolorings made by the partition editor: w^T M w * C(n,2).
inline Rational expected_changes(const RationalMatrix& M, const std::vector<Rational>& w, std::size_t n) {
    if (w.size() != M.size()) throw DomainError("weight vector length does not match the type");
    return quadratic_form(M, w) * Rational(static_cast<long>(choose2(n)));
}

// ---------------------------------------------------------------------------
// Bounds

enum class BoundKind { upper, lower };

template <class Kind>
struct DistBound {
    Rational value;
    BoundKind kind = BoundKind::upper;
    std::size_t kmax = 0;
    std::optional<Type<Kind>> type;  // upper: the witnessing type
    std::vector<Rational> weights;   // upper: optimal simplex weights
    std::string argument;            // lower: how the value was obtained
};

namespace detail {

inline void check_density(const MulticolorFamily& f, const DensityVector& p) {
    if (p.r() != f.r) throw DomainError("density has " + std::to_string(p.r()) + " entries, property has r=" + std::to_string(f.r));
}

inline void check_density(const DirectedFamily& f, const DirDensity& d) {
    if (d.palette.kind != f.palette.kind) throw DomainError("density palette does not match the property");
}

inline Rational min_entry(const RationalMatrix& M) {
    Rational best = M(0, 0);
    for (std::size_t i = 0; i < M.size(); ++i) {
        for (std::size_t j = 0; j < M.size(); ++j) best = std::min(best, M(i, j));
    }
    return best;
}

}  // namespace detail

/// min over `types` of g_K(p). Ties keep the earliest type, so the result
/// does not depend on `jobs`.
template <class Kind>
DistBound<Kind> dist_upper(const std::vector<Type<Kind>>& types, const Density<Kind>& p, std::size_t kmax, unsigned jobs = 1) {
    if (types.empty()) throw DomainError("no admissible type with at most " + std::to_string(kmax) + " vertices");
    const auto weights = color_weights(p);
    std::vector<RationalMatrix> mats(types.size());
    std::vector<Rational> lows(types.size());
    for (std::size_t i = 0; i < types.size(); ++i) {
        mats[i] = m_matrix(types[i], weights);
        lows[i] = detail::min_entry(mats[i]);
    }
    // a cheap sequential pass on the minimum entry gives a bound for pruning
    Rational prune = 2;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (mats[i].size() == 1) prune = std::min(prune, mats[i](0, 0));
    }
    std::vector<std::optional<SimplexMin>> results(types.size());
    parallel_for(types.size(), jobs, [&](std::size_t i) {
        if (lows[i] <= prune) results[i] = g_value(mats[i]);
    });
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (results[i] && (!best || results[i]->value < results[*best]->value)) best = i;
    }
    DistBound<Kind> out;
    out.kind = BoundKind::upper;
    out.kmax = kmax;
    out.value = results[*best]->value;
    out.type = types[*best];
    out.weights = results[*best]->weights;
    return out;
}

/// Certified upper bound on dist(p, H) from every admissible type on at most kmax vertices.
template <class Kind>
DistBound<Kind> dist_upper(const Family<Kind>& family, const Density<Kind>& p, std::size_t kmax, unsigned jobs = 1,
                           EnumerationLimits limits = {}) {
    detail::check_density(family, p);
    return dist_upper(enumerate_types(family, kmax, limits), p, kmax, jobs);
}

/// Turan-style lower bound on dist(H) driven by the strong chromatic number.
template <class Kind>
DistBound<Kind> dist_lower_turan(const Family<Kind>& family) {
    const auto chi = chromatic_number(family, Mode::strong);
    if (chi.trivial) throw DomainError("property is trivial; no Turan bound");
    const long ell = chi.chi - 1;
    long factor = 0;
    std::string name;
    if constexpr (Kind::directed) {
        switch (family.palette.kind) {
        case PaletteKind::full: factor = 4; break;
        case PaletteKind::compl_:
        case PaletteKind::orien: factor = 3; break;
        case PaletteKind::undir:
        case PaletteKind::tourn: factor = 2; break;
        }
        name = "palette " + palette_name(family.palette.kind);
    } else {
        factor = family.r;
        name = "r=" + std::to_string(family.r);
    }
    DistBound<Kind> out;
    out.kind = BoundKind::lower;
    out.value = Rational(1, factor * ell);
    out.argument = "1/(" + std::to_string(factor) + "*(chi_strong-1)) with chi_strong=" + std::to_string(chi.chi) + ", " + name;
    return out;
}

// ---------------------------------------------------------------------------
// max over p of min_K f_K(p)

/// Coefficients of f_K as a linear form in the color-weight variables.
/// Multicolor: one variable per color. Directed: (p_o, p, q).
template <class Kind>
std::vector<Rational> f_coefficients(const Type<Kind>& K, ColorSet universe) {
    const std::size_t k = K.size();
    const Rational cell(1, static_cast<long>(k * k));
    if constexpr (Kind::directed) {
        std::vector<Rational> c(3, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const ColorSet s = K.at(i, j);
                if (!contains(s, 0)) c[0] += cell;
                if (!contains(s, 1)) c[1] += cell;
                c[2] += cell * (2 - popcount(static_cast<ColorSet>(s & arc_bits)));
            }
        }
        return c;
    } else {
        const int r = popcount(universe);
        std::vector<Rational> c(static_cast<std::size_t>(r), Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                for (int rho = 0; rho < r; ++rho) {
                    if (!contains(K.at(i, j), static_cast<unsigned>(rho))) c[static_cast<std::size_t>(rho)] += cell;
                }
            }
        }
        return c;
    }
}

template <class Kind>
struct DistMax {
    DistBound<Kind> bound;
    Density<Kind> argmax;
};

namespace detail {

/// Drops duplicate and dominated coefficient vectors: if c' <= c coordinatewise
/// then c never attains the minimum alone.
inline std::vector<std::size_t> pareto_minimal(const std::vector<std::vector<Rational>>& cs) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cs.size() && !dominated; ++j) {
            if (i == j) continue;
            bool le = true, equal = true;
            for (std::size_t t = 0; t < cs[i].size(); ++t) {
                if (cs[j][t] > cs[i][t]) le = false;
                if (cs[j][t] != cs[i][t]) equal = false;
            }
            // among equal vectors keep the first
            if (le && (!equal || j < i)) dominated = true;
        }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

}  // namespace detail

/// max over the density domain of min over the candidate types of f_K(p),
/// solved as a linear program. Candidates are the admissible types on at most
/// kmax vertices plus the clique types of the top weak spectrum tuples.
/// Ties in the maximizer are broken toward the lexicographically smallest density.
template <class Kind>
DistMax<Kind> dist_max_upper(const Family<Kind>& family, std::size_t kmax, EnumerationLimits limits = {}) {
    auto types = enumerate_types(family, kmax, limits);
    const auto weak = clique_spectrum(family, Mode::weak);
    for (const auto& t : top_tuples(weak)) {
        if (tuple_sum(t) == 0) continue;
        auto K = canonical_form(clique_type(family, t));
        if (std::find(types.begin(), types.end(), K) == types.end()) types.push_back(K);
    }
    if (types.empty()) throw DomainError("no admissible type: the property is trivial");

    std::vector<std::vector<Rational>> coeffs;
    for (const auto& K : types) coeffs.push_back(f_coefficients(K, family.universe()));
    const auto rows = detail::pareto_minimal(coeffs);
    const std::size_t nx = coeffs[0].size();

    // variables: x (nx) then t
    LinearProgram lp;
    lp.objective.assign(nx + 1, Rational(0));
    lp.objective[nx] = 1;
    for (std::size_t i : rows) {
        std::vector<Rational> row(nx + 1, Rational(0));
        for (std::size_t v = 0; v < nx; ++v) row[v] = -coeffs[i][v];
        row[nx] = 1;
        lp.add(row, Relation::less_equal, 0);
    }
    std::vector<Rational> mass(nx + 1, Rational(0));
    for (std::size_t v = 0; v < nx; ++v) mass[v] = 1;
    if constexpr (Kind::directed) mass[2] = 2;  // p_o + p + 2q = 1
    lp.add(mass, Relation::equal, 1);
    if constexpr (Kind::directed) {
        const Palette& P = family.palette;
        auto zero = [&](std::size_t v) {
            std::vector<Rational> row(nx + 1, Rational(0));
            row[v] = 1;
            lp.add(row, Relation::equal, 0);
        };
        if (!P.has_none()) zero(0);
        if (!P.has_both()) zero(1);
        if (!P.has_arrows()) zero(2);
    }

    auto sol = solve(lp);
    if (sol.status != LpStatus::optimal) throw DomainError("density linear program failed");
    const Rational best = sol.value;

    // lexicographic tie-break on the reported density: Multicolor (p_1..p_r),
    // directed (p, q)
    std::vector<std::size_t> order(nx);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if constexpr (Kind::directed) order = {1, 2, 0};
    std::vector<Rational> tplus(nx + 1, Rational(0));
    tplus[nx] = 1;
    lp.add(tplus, Relation::greater_equal, best);
    for (std::size_t v : order) {
        LinearProgram step = lp;
        step.objective.assign(nx + 1, Rational(0));
        step.objective[v] = -1;
        auto s = solve(step);
        if (s.status != LpStatus::optimal) throw DomainError("density tie-break program failed");
        sol = s;
        std::vector<Rational> fix(nx + 1, Rational(0));
        fix[v] = 1;
        lp.add(fix, Relation::equal, s.x[v]);
    }

    DistMax<Kind> out{DistBound<Kind>{}, [&] {
                          if constexpr (Kind::directed) return DirDensity(sol.x[1], sol.x[2], family.palette);
                          else return DensityVector(std::vector<Rational>(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(nx)));
                      }()};
    out.bound.kind = BoundKind::upper;
    out.bound.kmax = kmax;
    out.bound.value = best;
    for (std::size_t i = 0; i < types.size(); ++i) {
        Rational f = 0;
        for (std::size_t v = 0; v < nx; ++v) f += coeffs[i][v] * sol.x[v];
        if (f == best) {
            out.bound.type = types[i];
            out.bound.weights.assign(types[i].size(), Rational(1, static_cast<long>(types[i].size())));
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric families

/// True when the weak spectrum is closed under every permutation of the colors.
inline bool is_color_symmetric(const CliqueSpectrum& s, int r) {
    std::set<SpectrumTuple> all(s.tuples.begin(), s.tuples.end());
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (const auto& t : s.tuples) {
            SpectrumTuple u(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) u[static_cast<std::size_t>(perm[i])] = t[i];
            if (!all.count(u)) return false;
        }
    }
    return true;
}

/// 1/(r * l) with l the largest tuple sum of the weak spectrum; valid for
/// color-symmetric properties.
inline Rational symmetric_bound(const MulticolorFamily& family) {
    const auto weak = clique_spectrum(family, Mode::weak);
    if (!is_color_symmetric(weak, family.r)) throw DomainError("property is not color-symmetric");
    const int ell = chi_of(weak) - 1;
    if (ell <= 0) throw DomainError("weak spectrum has no nonzero tuple");
    return Rational(1, static_cast<long>(family.r) * ell);
}

// ---------------------------------------------------------------------------
// Grid tabulation

/// Every density on the grid with spacing 1/steps, in lexicographic order.
inline std::vector<DensityVector> density_grid(int r, long steps) {
    if (steps < 1) throw DomainError("grid step must be 1/N for a positive integer N");
    std::vector<DensityVector> out;
    std::vector<long> a(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i + 1 == a.size()) {
            a[i] = left;
            std::vector<Rational> p;
            for (long x : a) p.emplace_back(x, steps);
            for (auto& x : p) x.canonicalize();
            out.emplace_back(std::move(p));
            return;
        }
        for (long x = 0; x <= left; ++x) {
            a[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, steps);
    return out;
}

/// Palette-feasible (p, q) grid points, ordered by p then q.
inline std::vector<DirDensity> dir_density_grid(Palette palette, long steps) {
    if (steps < 1) throw DomainError("grid step must be 1/N for a positive integer N");
    std::vector<DirDensity> out;
    if (palette.kind == PaletteKind::tourn) {
        out.emplace_back(Rational(0), Rational(1, 2), palette);
        return out;
    }
    for (long a = 0; a <= steps; ++a) {
        for (long b = 0; a + 2 * b <= steps; ++b) {
            Rational p(a, steps), q(b, steps);
            p.canonicalize();
            q.canonicalize();
            try {
                out.emplace_back(p, q, palette);
            } catch (const DomainError&) {
            }
        }
    }
    return out;
}

template <class Kind>
struct GridRow {
    Density<Kind> p;
    Rational value;
};

/// dist_upper at every grid point, sharing one type enumeration.
template <class Kind>
std::vector<GridRow<Kind>> distfn_grid(const Family<Kind>& family, std::size_t kmax, long steps, unsigned jobs = 1,
                                       EnumerationLimits limits = {}) {
    const auto types = enumerate_types(family, kmax, limits);
    std::vector<Density<Kind>> points;
    if constexpr (Kind::directed) points = dir_density_grid(family.palette, steps);
    else points = density_grid(family.r, steps);
    std::vector<GridRow<Kind>> rows;
    for (const auto& p : points) rows.push_back({p, dist_upper(types, p, kmax, jobs).value});
    return rows;
}

}  // namespace edk

#endif  // EDK_DISTFUN_HPP
