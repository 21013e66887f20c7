#ifndef EDK_GRAPH_HPP
#define EDK_GRAPH_HPP

#include "edk/color.hpp"
#include "edk/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace edk {

/// A complete graph on vertices 0..n-1 whose pairs carry colors of `Kind`.
///
/// Only the pairs i < j are stored. `color(i, j)` for i > j returns the
/// reversed color, so digraph arcs read correctly from either endpoint.
template <class Kind>
class CompleteGraph {
public:
    using color_type = typename Kind::color_type;

    CompleteGraph() = default;

    /// Multicolor: `num_colors` is r and every pair starts as `fill`.
    /// Directed: `num_colors` must be 4.
    CompleteGraph(std::size_t n, int num_colors, color_type fill)
        : n_(n), num_colors_(num_colors), pairs_(n * (n ? n - 1 : 0) / 2, fill) {
        if constexpr (Kind::directed) {
            if (num_colors != 4) throw std::invalid_argument("digraphs use exactly 4 pair colors");
        } else {
            if (num_colors < 2 || num_colors > 8) throw std::invalid_argument("r must be in 2..8");
        }
        if (!pairs_.empty()) check_color(fill);
    }

    std::size_t size() const noexcept { return n_; }
    int num_colors() const noexcept { return num_colors_; }
    std::size_t num_pairs() const noexcept { return pairs_.size(); }

    color_type color(std::size_t i, std::size_t j) const {
        return i < j ? pairs_[pair_index(i, j)] : Kind::reverse(pairs_[pair_index(j, i)]);
    }

    void set_color(std::size_t i, std::size_t j, color_type c) {
        check_color(c);
        if (i < j) {
            pairs_[pair_index(i, j)] = c;
        } else {
            pairs_[pair_index(j, i)] = Kind::reverse(c);
        }
    }

    /// Index of pair {i, j}, i < j, in row-major upper-triangle order.
    std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
        return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    std::span<const color_type> pairs() const noexcept { return pairs_; }

    friend bool operator==(const CompleteGraph&, const CompleteGraph&) = default;

private:
    void check_color(color_type c) const {
        if constexpr (Kind::directed) {
            if (Kind::index(c) > 3) throw std::invalid_argument("bad arc color");
        } else {
            if (c < 1 || c > num_colors_) throw std::invalid_argument("color out of range");
        }
    }

    std::size_t n_ = 0;
    int num_colors_ = Kind::directed ? 4 : 2;
    std::vector<color_type> pairs_;
};

using ColoredGraph = CompleteGraph<Multicolor>;
using DiGraph = CompleteGraph<Directed>;

inline ColoredGraph monochromatic(std::size_t n, int r, std::uint8_t color) { return ColoredGraph(n, r, color); }

/// Builds a graph from the upper triangle listed row by row.
template <class Kind>
CompleteGraph<Kind> from_upper_triangle(std::size_t n, int num_colors,
                                        std::span<const typename Kind::color_type> upper) {
    if (upper.size() != n * (n ? n - 1 : 0) / 2) {
        throw std::invalid_argument("upper triangle has the wrong number of entries");
    }
    typename Kind::color_type fill = upper.empty() ? Kind::from_index(0) : upper[0];
    CompleteGraph<Kind> g(n, num_colors, fill);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.set_color(i, j, upper[k++]);
        }
    }
    return g;
}

inline ColoredGraph colored_graph(std::size_t n, int r, std::initializer_list<std::uint8_t> upper) {
    std::vector<std::uint8_t> v(upper);
    return from_upper_triangle<Multicolor>(n, r, v);
}

inline DiGraph digraph(std::size_t n, std::initializer_list<Arc> upper) {
    std::vector<Arc> v(upper);
    return from_upper_triangle<Directed>(n, 4, v);
}

/// Restriction to the vertices in `subset`, relabeled 0..|S|-1 in the given order.
/// Passing a sorted subset preserves vertex order.
template <class Kind>
CompleteGraph<Kind> induced(const CompleteGraph<Kind>& g, std::span<const std::size_t> subset) {
    const std::size_t m = subset.size();
    CompleteGraph<Kind> out(m, g.num_colors(), Kind::from_index(0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (subset[a] >= g.size() || subset[b] >= g.size()) throw std::out_of_range("vertex out of range");
            out.set_color(a, b, g.color(subset[a], subset[b]));
        }
    }
    return out;
}

/// Relabels vertex v as perm[v].
template <class Kind>
CompleteGraph<Kind> permute(const CompleteGraph<Kind>& g, std::span<const std::size_t> perm) {
    CompleteGraph<Kind> out(g.size(), g.num_colors(), Kind::from_index(0));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            out.set_color(perm[i], perm[j], g.color(i, j));
        }
    }
    return out;
}

template <class Kind>
ColorSet colors_present(const CompleteGraph<Kind>& g) {
    ColorSet s = 0;
    for (auto c : g.pairs()) {
        s |= bit<Kind>(c);
        s |= bit<Kind>(Kind::reverse(c));
    }
    return s;
}

namespace detail {

/// Backtracking search for injective, color-preserving maps H -> G.
/// The next H vertex is always the one with the fewest remaining candidates.
template <class Kind, class Visit>
bool search_copies(const CompleteGraph<Kind>& g, const CompleteGraph<Kind>& h, Visit&& visit) {
    const std::size_t hn = h.size();
    const std::size_t gn = g.size();
    if (hn > gn) return false;
    if (hn == 0) {
        std::vector<std::size_t> empty;
        return visit(std::span<const std::size_t>(empty));
    }

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(hn, unset);
    std::vector<char> used(gn, 0);

    auto compatible = [&](std::size_t hv, std::size_t gv) {
        if (used[gv]) return false;
        for (std::size_t hu = 0; hu < hn; ++hu) {
            if (map[hu] == unset) continue;
            if (g.color(map[hu], gv) != h.color(hu, hv)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == hn) return visit(std::span<const std::size_t>(map));
        std::size_t best_v = unset;
        std::size_t best_count = gn + 1;
        for (std::size_t hv = 0; hv < hn; ++hv) {
            if (map[hv] != unset) continue;
            std::size_t count = 0;
            for (std::size_t gv = 0; gv < gn; ++gv) {
                if (compatible(hv, gv)) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best_v = hv;
            }
            if (count == 0) return false;
        }
        for (std::size_t gv = 0; gv < gn; ++gv) {
            if (!compatible(best_v, gv)) continue;
            map[best_v] = gv;
            used[gv] = 1;
            const bool stop = self(self, depth + 1);
            map[best_v] = unset;
            used[gv] = 0;
            if (stop) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// One induced copy of `h` in `g`, as the image of each vertex of `h`.
template <class Kind>
std::optional<std::vector<std::size_t>> find_induced(const CompleteGraph<Kind>& g, const CompleteGraph<Kind>& h) {
    std::optional<std::vector<std::size_t>> found;
    detail::search_copies(g, h, [&](std::span<const std::size_t> m) {
        found.emplace(m.begin(), m.end());
        return true;
    });
    return found;
}

template <class Kind>
bool contains_induced(const CompleteGraph<Kind>& g, const CompleteGraph<Kind>& h) {
    return find_induced(g, h).has_value();
}

/// Calls `visit(map)` for every induced copy (every injective embedding, so
/// automorphic images are reported separately). Stop early by returning true.
template <class Kind, class Visit>
void for_each_induced(const CompleteGraph<Kind>& g, const CompleteGraph<Kind>& h, Visit&& visit) {
    detail::search_copies(g, h, std::forward<Visit>(visit));
}

/// Number of pairs whose colors differ.
template <class Kind>
std::size_t hamming(const CompleteGraph<Kind>& a, const CompleteGraph<Kind>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: size mismatch");
    std::size_t d = 0;
    for (std::size_t k = 0; k < a.num_pairs(); ++k) {
        if (a.pairs()[k] != b.pairs()[k]) ++d;
    }
    return d;
}

template <class Kind>
Rational normalized_hamming(const CompleteGraph<Kind>& a, const CompleteGraph<Kind>& b) {
    const std::size_t d = hamming(a, b);
    if (a.num_pairs() == 0) return Rational(0);
    return Rational(static_cast<long>(d), static_cast<unsigned long>(a.num_pairs()));
}

inline std::size_t choose2(std::size_t n) { return n * (n ? n - 1 : 0) / 2; }

/// Probability vector p = (p_1, ..., p_r) over multicolor colors.
class DensityVector {
public:
    DensityVector() = default;
    explicit DensityVector(std::vector<Rational> entries) : p_(std::move(entries)) {
        if (p_.size() < 2) throw DomainError("density vector needs at least 2 entries");
        Rational sum = 0;
        for (const auto& x : p_) {
            if (x < 0) throw DomainError("density entries must be nonnegative");
            sum += x;
        }
        if (sum != 1) throw DomainError("density entries must sum to 1");
    }

    static DensityVector uniform(int r) { return DensityVector(std::vector<Rational>(r, Rational(1, r))); }

    int r() const noexcept { return static_cast<int>(p_.size()); }
    const Rational& operator[](std::size_t i) const { return p_[i]; }
    const std::vector<Rational>& entries() const noexcept { return p_; }

    friend bool operator==(const DensityVector&, const DensityVector&) = default;

private:
    std::vector<Rational> p_;
};

/// Directed densities: p for "-", q for each arrow, 1 - p - 2q for "o".
struct DirDensity {
    Rational p;
    Rational q;
    Palette palette;

    DirDensity() = default;
    DirDensity(Rational p_, Rational q_, Palette pal) : p(std::move(p_)), q(std::move(q_)), palette(pal) {
        if (p < 0 || q < 0 || p + 2 * q > 1) throw DomainError("directed density needs p, q >= 0 and p + 2q <= 1");
        switch (palette.kind) {
        case PaletteKind::compl_:
            if (p + 2 * q != 1) throw DomainError("palette compl requires p + 2q = 1");
            break;
        case PaletteKind::orien:
            if (p != 0) throw DomainError("palette orien requires p = 0");
            break;
        case PaletteKind::undir:
            if (q != 0) throw DomainError("palette undir requires q = 0");
            break;
        case PaletteKind::tourn:
            if (p != 0 || q != Rational(1, 2)) throw DomainError("palette tourn requires p = 0 and q = 1/2");
            break;
        case PaletteKind::full:
            break;
        }
    }

    Rational none() const { return 1 - p - 2 * q; }

    friend bool operator==(const DirDensity& a, const DirDensity& b) {
        return a.p == b.p && a.q == b.q && a.palette == b.palette;
    }
};

/// Per-color-index weights w such that a color set S covers sum_{i in S} w[i].
using ColorWeights = std::array<Rational, 8>;

inline ColorWeights color_weights(const DensityVector& d) {
    ColorWeights w{};
    for (int i = 0; i < d.r(); ++i) w[i] = d[i];
    return w;
}

inline ColorWeights color_weights(const DirDensity& d) {
    ColorWeights w{};
    w[0] = d.none();
    w[1] = d.p;
    w[2] = d.q;
    w[3] = d.q;
    return w;
}

/// Fraction of pairs carrying each color (index order). Entries sum to 1.
template <class Kind>
std::vector<Rational> color_fractions(const CompleteGraph<Kind>& g) {
    if (g.size() < 2) throw DomainError("color density needs at least 2 vertices");
    std::vector<long> counts(Kind::directed ? 4 : g.num_colors(), 0);
    for (auto c : g.pairs()) ++counts[Kind::index(c)];
    std::vector<Rational> out;
    const auto total = static_cast<unsigned long>(g.num_pairs());
    for (long c : counts) out.emplace_back(c, total);
    for (auto& x : out) x.canonicalize();
    return out;
}

inline DensityVector color_density(const ColoredGraph& g) { return DensityVector(color_fractions(g)); }

/// (o, -, ->, <-) fractions, arrows relative to the i < j vertex order.
inline std::array<Rational, 4> color_density(const DiGraph& g) {
    auto f = color_fractions(g);
    return {f[0], f[1], f[2], f[3]};
}

/// Collapses the four directed fractions to (p, q) with q the mean arrow density.
inline DirDensity dir_density(const DiGraph& g, Palette palette) {
    auto f = color_density(g);
    Rational q = (f[2] + f[3]) / 2;
    return DirDensity(f[1], q, palette);
}

/// A hereditary property given by a finite forbidden family.
template <class Kind>
struct Family;

template <>
struct Family<Multicolor> {
    int r = 2;
    std::vector<ColoredGraph> forbidden;

    ColorSet universe() const noexcept { return static_cast<ColorSet>((1u << r) - 1u); }
    int num_color_indices() const noexcept { return r; }
    void validate() const {
        if (r < 2 || r > 8) throw DomainError("r must be in 2..8");
        if (forbidden.empty()) throw DomainError("forbidden family is empty");
        for (const auto& h : forbidden) {
            if (h.size() == 0) throw DomainError("forbidden graphs need at least one vertex");
            if (h.num_colors() != r) throw DomainError("forbidden graph has a different r");
        }
    }
};

template <>
struct Family<Directed> {
    Palette palette;
    std::vector<DiGraph> forbidden;

    ColorSet universe() const noexcept { return palette.allowed; }
    int num_color_indices() const noexcept { return 4; }
    void validate() const {
        if (forbidden.empty()) throw DomainError("forbidden family is empty");
        for (const auto& h : forbidden) {
            if (h.size() == 0) throw DomainError("forbidden graphs need at least one vertex");
            if ((colors_present(h) & ~palette.allowed) != 0) {
                throw DomainError("forbidden digraph uses a color outside palette " + palette_name(palette.kind));
            }
        }
    }
};

using MulticolorFamily = Family<Multicolor>;
using DirectedFamily = Family<Directed>;

template <class Kind>
std::size_t min_forbidden_size(const Family<Kind>& family) {
    std::size_t m = static_cast<std::size_t>(-1);
    for (const auto& h : family.forbidden) m = std::min(m, h.size());
    return m;
}

template <class Kind>
bool is_member(const CompleteGraph<Kind>& g, const Family<Kind>& family) {
    return std::none_of(family.forbidden.begin(), family.forbidden.end(),
                        [&](const auto& h) { return contains_induced(g, h); });
}

}  // namespace edk

#endif  // EDK_GRAPH_HPP
