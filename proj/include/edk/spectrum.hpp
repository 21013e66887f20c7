#ifndef EDK_SPECTRUM_HPP
#define EDK_SPECTRUM_HPP

#include "edk/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace edk {

// ---------------------------------------------------------------------------
// Digraph orientation helpers

/// True iff the single-arc pairs among `vertices` contain no directed cycle.
/// "o" and "-" pairs are ignored.
inline bool is_acyclic(const DiGraph& d, std::span<const std::size_t> vertices) {
    const std::size_t m = vertices.size();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(m, 0);
    auto dfs = [&](auto&& self, std::size_t a) -> bool {
        state[a] = 1;
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a || d.color(vertices[a], vertices[b]) != Arc::forward) continue;
            if (state[b] == 1) return false;
            if (state[b] == 0 && !self(self, b)) return false;
        }
        state[a] = 2;
        return true;
    };
    for (std::size_t a = 0; a < m; ++a) {
        if (state[a] == 0 && !dfs(dfs, a)) return false;
    }
    return true;
}

inline bool is_acyclic(const DiGraph& d) {
    std::vector<std::size_t> all(d.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return is_acyclic(d, all);
}

/// Every pair is a single arc and the arc relation is a strict total order.
inline bool is_transitive_tournament(const DiGraph& d) {
    for (auto c : d.pairs()) {
        if (c != Arc::forward && c != Arc::backward) return false;
    }
    return is_acyclic(d);
}

// ---------------------------------------------------------------------------
// Clique spectra

enum class Mode { weak, strong };

inline std::string mode_name(Mode m) { return m == Mode::weak ? "weak" : "strong"; }

/// (a_1..a_r) for multicolor, (a_0, a_1, a_2) for digraphs where a_0 counts
/// "o"-parts, a_1 acyclic/transitive parts and a_2 "-"-parts.
using SpectrumTuple = std::vector<int>;

struct CliqueSpectrum {
    Mode mode = Mode::weak;
    std::vector<SpectrumTuple> tuples;  // lexicographically descending

    bool contains(const SpectrumTuple& t) const { return std::find(tuples.begin(), tuples.end(), t) != tuples.end(); }
};

/// Constraint on the pairs inside one refined part.
struct PartRule {
    ColorSet allowed = 0;  // color indices a pair inside the part may carry
    bool acyclic = false;  // single arcs inside the part must form an acyclic digraph
};

inline std::size_t tuple_size(const MulticolorFamily& family) { return static_cast<std::size_t>(family.r); }
inline std::size_t tuple_size(const DirectedFamily&) { return 3; }

/// Coordinates that may be nonzero: every color for multicolor; for digraphs
/// a_0 needs "o", a_1 needs arrows and a_2 needs "-" in the palette.
inline std::vector<bool> free_coordinates(const MulticolorFamily& f) { return std::vector<bool>(f.r, true); }
inline std::vector<bool> free_coordinates(const DirectedFamily& f) {
    return {f.palette.has_none(), f.palette.has_arrows(), f.palette.has_both()};
}

inline PartRule part_rule(const MulticolorFamily& f, std::size_t coord, Mode mode) {
    const ColorSet own = static_cast<ColorSet>(1u << coord);
    return {mode == Mode::weak ? static_cast<ColorSet>(f.universe() & ~own) : own, false};
}

inline PartRule part_rule(const DirectedFamily&, std::size_t coord, Mode mode) {
    constexpr ColorSet none = 0b0001, both = 0b0010, all = 0b1111;
    switch (coord) {
    case 0: return {mode == Mode::weak ? static_cast<ColorSet>(all & ~none) : none, false};
    case 1: return {mode == Mode::weak ? all : arc_bits, true};
    default: return {mode == Mode::weak ? static_cast<ColorSet>(all & ~both) : both, false};
    }
}

namespace detail {

inline bool acyclic_with(const DiGraph& h, const std::vector<std::size_t>& members) { return is_acyclic(h, members); }

template <class Kind>
bool acyclic_with(const CompleteGraph<Kind>&, const std::vector<std::size_t>&) {
    return true;
}

/// Can V(h) be split into labeled parts (rules[j] for part j, parts may stay
/// empty) so that every part obeys its rule? Interchangeable parts with the
/// same rule are filled in order to skip relabelings.
template <class Kind>
bool partitionable(const CompleteGraph<Kind>& h, const std::vector<PartRule>& rules, const std::vector<int>& group) {
    const std::size_t m = h.size();
    const std::size_t parts = rules.size();
    if (parts == 0) return m == 0;
    std::vector<std::vector<std::size_t>> members(parts);

    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == m) return true;
        for (std::size_t j = 0; j < parts; ++j) {
            // an empty part may only be opened if the previous part of its group is in use
            if (members[j].empty() && j > 0 && group[j - 1] == group[j] && members[j - 1].empty()) continue;
            const PartRule& rule = rules[j];
            bool ok = true;
            for (std::size_t u : members[j]) {
                if (!contains(rule.allowed, Kind::index(h.color(u, v)))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            members[j].push_back(v);
            if ((!rule.acyclic || acyclic_with(h, members[j])) && self(self, v + 1)) return true;
            members[j].pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

template <class Kind>
void check_tuple(const SpectrumTuple& t, const Family<Kind>& family) {
    if (t.size() != tuple_size(family)) throw DomainError("tuple dimension does not match the property");
    auto free = free_coordinates(family);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0) throw DomainError("tuple entries must be nonnegative");
        if (t[i] != 0 && !free[i]) throw DomainError("tuple uses a coordinate the palette excludes");
    }
}

/// True iff some forbidden graph splits into parts as prescribed by `t`.
template <class Kind>
bool is_good(const SpectrumTuple& t, const Family<Kind>& family, Mode mode) {
    check_tuple(t, family);
    std::vector<PartRule> rules;
    std::vector<int> group;
    for (std::size_t c = 0; c < t.size(); ++c) {
        for (int j = 0; j < t[c]; ++j) {
            rules.push_back(part_rule(family, c, mode));
            group.push_back(static_cast<int>(c));
        }
    }
    return std::any_of(family.forbidden.begin(), family.forbidden.end(),
                       [&](const auto& h) { return detail::partitionable(h, rules, group); });
}

template <class Kind>
bool is_weakly_good(const SpectrumTuple& t, const Family<Kind>& family) {
    return is_good(t, family, Mode::weak);
}

template <class Kind>
bool is_strongly_good(const SpectrumTuple& t, const Family<Kind>& family) {
    return is_good(t, family, Mode::strong);
}

/// Calls f(t) for every admissible tuple with coordinate sum < bound.
template <class Kind, class F>
void for_each_tuple_below(const Family<Kind>& family, std::size_t bound, F&& f) {
    const auto free = free_coordinates(family);
    SpectrumTuple t(tuple_size(family), 0);
    auto rec = [&](auto&& self, std::size_t c, std::size_t used) -> void {
        if (c == t.size()) {
            f(t);
            return;
        }
        const std::size_t cap = free[c] ? bound - 1 - used : 0;
        for (std::size_t a = 0; a <= cap; ++a) {
            t[c] = static_cast<int>(a);
            self(self, c + 1, used + a);
        }
        t[c] = 0;
    };
    if (bound > 0) rec(rec, 0, 0);
}

/// The set of tuples that are not good. Tuples with sum >= min |V(H)| are
/// always good (singleton parts), so the enumeration stops there.
template <class Kind>
CliqueSpectrum clique_spectrum(const Family<Kind>& family, Mode mode) {
    family.validate();
    CliqueSpectrum s;
    s.mode = mode;
    for_each_tuple_below(family, min_forbidden_size(family), [&](const SpectrumTuple& t) {
        if (!is_good(t, family, mode)) s.tuples.push_back(t);
    });
    std::sort(s.tuples.begin(), s.tuples.end(), std::greater<>());
    return s;
}

inline int tuple_sum(const SpectrumTuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

/// Spectrum tuples of maximum coordinate sum.
inline std::vector<SpectrumTuple> top_tuples(const CliqueSpectrum& s) {
    int best = -1;
    for (const auto& t : s.tuples) best = std::max(best, tuple_sum(t));
    std::vector<SpectrumTuple> out;
    for (const auto& t : s.tuples) {
        if (tuple_sum(t) == best) out.push_back(t);
    }
    return out;
}

struct Chromatic {
    int chi = 0;
    /// Set when the strong spectrum is just the zero tuple: every large enough
    /// graph contains a forbidden one, so the property is finite.
    bool trivial = false;
};

inline int chi_of(const CliqueSpectrum& s) {
    int best = 0;
    for (const auto& t : s.tuples) best = std::max(best, tuple_sum(t));
    return s.tuples.empty() ? 0 : best + 1;
}

template <class Kind>
Chromatic chromatic_number(const Family<Kind>& family, Mode mode) {
    const auto strong = clique_spectrum(family, Mode::strong);
    Chromatic out;
    out.trivial = chi_of(strong) <= 1;
    out.chi = mode == Mode::strong ? chi_of(strong) : chi_of(clique_spectrum(family, Mode::weak));
    return out;
}

}  // namespace edk

#endif  // EDK_SPECTRUM_HPP
