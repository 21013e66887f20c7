#ifndef EDK_EDITING_HPP
#define EDK_EDITING_HPP

#include "edk/graph.hpp"
#include "edk/random.hpp"
#include "edk/spectrum.hpp"
#include "edk/types.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace edk {

template <class Kind>
struct EditResult {
    CompleteGraph<Kind> graph;
    std::size_t changes = 0;
    std::vector<std::size_t> partition;  // part index per vertex
};

namespace detail {

inline unsigned lowest_index(ColorSet s) { return static_cast<unsigned>(std::countr_zero(static_cast<unsigned>(s))); }

/// Arc between x and y (x < y) that agrees with the order given by `rank`.
inline Arc along(const std::vector<std::size_t>& rank, std::size_t x, std::size_t y) {
    return rank[x] < rank[y] ? Arc::forward : Arc::backward;
}

}  // namespace detail

/// Recolors G so that the partition map is an embedding into K.
///
/// A cross pair whose color is not allowed becomes the smallest allowed color.
/// Inside a part whose vertex set holds exactly one arrow, every arc is
/// oriented along `rank` (and a recoloring into an arrow uses that
/// orientation too), so the part ends up acyclic. `rank` is only read for
/// digraphs.
template <class Kind>
EditResult<Kind> edit_with_partition(const CompleteGraph<Kind>& g, const Type<Kind>& K, const std::vector<std::size_t>& part,
                                     const std::vector<std::size_t>& rank = {}) {
    const std::size_t n = g.size();
    if (part.size() != n) throw DomainError("partition length does not match the graph");
    for (auto p : part) {
        if (p >= K.size()) throw DomainError("partition refers to a part the type does not have");
    }
    if (Kind::directed && rank.size() != n) throw DomainError("vertex order length does not match the graph");
    if constexpr (!Kind::directed) {
        if (popcount(K.universe()) != g.num_colors()) throw DomainError("type and graph use different numbers of colors");
    }

    EditResult<Kind> out{g, 0, part};
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const auto c = g.color(x, y);
            auto next = c;
            const std::size_t i = part[x], j = part[y];
            if (i != j) {
                const ColorSet S = K.pair_set(i, j);
                if (!contains(S, Kind::index(c))) next = Kind::from_index(detail::lowest_index(S));
            } else {
                const ColorSet S = K.vertex_set(i);
                if constexpr (Kind::directed) {
                    const bool single_arrow = popcount(static_cast<ColorSet>(S & arc_bits)) == 1;
                    const bool arrow = c == Arc::forward || c == Arc::backward;
                    if (single_arrow && arrow) {
                        next = detail::along(rank, x, y);
                    } else if (!detail::within_ok<Kind>(c, S)) {
                        next = Kind::from_index(detail::lowest_index(S));
                        if (single_arrow && (next == Arc::forward || next == Arc::backward)) next = detail::along(rank, x, y);
                    }
                } else {
                    if (!contains(S, Kind::index(c))) next = Kind::from_index(detail::lowest_index(S));
                }
            }
            if (next != c) {
                out.graph.set_color(x, y, next);
                ++out.changes;
            }
        }
    }
    return out;
}

/// Algorithm 1: random partition with part probabilities w, then recolor.
inline EditResult<Multicolor> edit_by_type(const ColoredGraph& g, const RType& K, const std::vector<Rational>& w, std::uint64_t seed) {
    if (w.size() != K.size()) throw DomainError("weight vector length does not match the type");
    Rng rng(seed);
    auto part = sample_partition(g.size(), w, rng);
    return edit_with_partition(g, K, part);
}

/// Directed version: the random order is drawn after the partition.
inline EditResult<Directed> edit_by_dirtype(const DiGraph& g, const DirType& K, const std::vector<Rational>& w, std::uint64_t seed) {
    if (w.size() != K.size()) throw DomainError("weight vector length does not match the type");
    Rng rng(seed);
    auto part = sample_partition(g.size(), w, rng);
    auto rank = sample_order(g.size(), rng);
    return edit_with_partition(g, K, part, rank);
}

template <class Kind>
EditResult<Kind> edit_by_any_type(const CompleteGraph<Kind>& g, const Type<Kind>& K, const std::vector<Rational>& w, std::uint64_t seed) {
    if constexpr (Kind::directed) return edit_by_dirtype(g, K, w, seed);
    else return edit_by_type(g, K, w, seed);
}

// ---------------------------------------------------------------------------
// The simple algorithm

/// Part j of an l-part split belongs to spectrum coordinate coord[j]:
/// the first a_1 parts to coordinate 0, and so on.
inline std::vector<std::size_t> part_coordinates(const SpectrumTuple& t) {
    std::vector<std::size_t> coord;
    for (std::size_t c = 0; c < t.size(); ++c) {
        for (int j = 0; j < t[c]; ++j) coord.push_back(c);
    }
    return coord;
}

/// Simple editing on a given split. Multicolor: inside a part of color i,
/// every edge of color i gets the smallest other color. Directed: o-parts
/// and "-"-parts swap that color for the smallest other palette color, and
/// arc parts are oriented along `rank`.
template <class Kind>
EditResult<Kind> simple_edit_with_partition(const CompleteGraph<Kind>& g, const Family<Kind>& family, const SpectrumTuple& t,
                                            const std::vector<std::size_t>& part, const std::vector<std::size_t>& rank = {}) {
    const auto coord = part_coordinates(t);
    const std::size_t n = g.size();
    const ColorSet P = family.universe();
    EditResult<Kind> out{g, 0, part};
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (part[x] != part[y]) continue;
            const std::size_t c = coord.at(part[x]);
            const auto old = g.color(x, y);
            auto next = old;
            if constexpr (Kind::directed) {
                const bool arrow = old == Arc::forward || old == Arc::backward;
                auto replace = [&](unsigned banned) {
                    return Directed::from_index(detail::lowest_index(static_cast<ColorSet>(P & ~(1u << banned))));
                };
                if (c == 0 && old == Arc::none) next = replace(0);
                if (c == 2 && old == Arc::both) next = replace(1);
                if (c == 1 && arrow) next = detail::along(rank, x, y);
            } else {
                if (Kind::index(old) == c) next = Kind::from_index(detail::lowest_index(static_cast<ColorSet>(P & ~(1u << c))));
            }
            if (next != old) {
                out.graph.set_color(x, y, next);
                ++out.changes;
            }
        }
    }
    return out;
}

/// Splits V into l = sum(t) parts (equal sizes after a random shuffle, or
/// uniformly at random when `equipartition` is false) and edits.
template <class Kind>
EditResult<Kind> simple_edit(const CompleteGraph<Kind>& g, const Family<Kind>& family, const SpectrumTuple& t, bool equipartition,
                             std::uint64_t seed) {
    if (!clique_spectrum(family, Mode::weak).contains(t)) throw DomainError("tuple is not in the weak clique spectrum");
    const int ell = tuple_sum(t);
    if (ell == 0) throw DomainError("the zero tuple gives no parts");
    Rng rng(seed);
    std::vector<std::size_t> part(g.size());
    if (equipartition) {
        auto pos = sample_order(g.size(), rng);
        for (std::size_t v = 0; v < g.size(); ++v) part[v] = pos[v] % static_cast<std::size_t>(ell);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(ell - 1));
        for (auto& p : part) p = pick(rng);
    }
    std::vector<std::size_t> rank;
    if constexpr (Kind::directed) rank = sample_order(g.size(), rng);
    return simple_edit_with_partition(g, family, t, part, rank);
}

}  // namespace edk

#endif  // EDK_EDITING_HPP
