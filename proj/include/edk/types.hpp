#ifndef EDK_TYPES_HPP
#define EDK_TYPES_HPP

#include "edk/graph.hpp"
#include "edk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edk {

/// A type K = (U, phi): a complete graph whose vertices and pairs carry
/// nonempty color sets. For digraphs `pair_set(i, j)` reads the orientation
/// from u_i to u_j; `pair_set(j, i)` is its reverse.
template <class Kind>
class Type {
public:
    Type() = default;
    Type(std::size_t k, ColorSet universe) : k_(k), universe_(universe), phi_(k * k, universe) {}

    std::size_t size() const noexcept { return k_; }
    ColorSet universe() const noexcept { return universe_; }

    ColorSet vertex_set(std::size_t i) const { return phi_[i * k_ + i]; }
    ColorSet pair_set(std::size_t i, std::size_t j) const { return phi_[i * k_ + j]; }
    /// phi(u_i, u_j), including the diagonal.
    ColorSet at(std::size_t i, std::size_t j) const { return phi_[i * k_ + j]; }

    void set_vertex(std::size_t i, ColorSet s) { phi_[i * k_ + i] = s; }
    void set_pair(std::size_t i, std::size_t j, ColorSet s) {
        phi_[i * k_ + j] = s;
        phi_[j * k_ + i] = Kind::reverse_set(s);
    }

    /// Throws DomainError unless every set is a nonempty subset of the
    /// universe and no vertex carries the whole universe.
    void validate() const {
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) {
                const ColorSet s = at(i, j);
                if (s == 0) throw DomainError("type color sets must be nonempty");
                if ((s & ~universe_) != 0) throw DomainError("type color set leaves the palette");
            }
            if (vertex_set(i) == universe_) throw DomainError("a vertex of a type may not carry every color");
        }
    }

    /// Vertex sets first, then the upper triangle row by row.
    std::vector<ColorSet> encoding() const {
        std::vector<ColorSet> e;
        e.reserve(k_ + k_ * (k_ ? k_ - 1 : 0) / 2);
        for (std::size_t i = 0; i < k_; ++i) e.push_back(vertex_set(i));
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = i + 1; j < k_; ++j) e.push_back(pair_set(i, j));
        }
        return e;
    }

    friend bool operator==(const Type& a, const Type& b) {
        return a.k_ == b.k_ && a.universe_ == b.universe_ && a.phi_ == b.phi_;
    }

private:
    std::size_t k_ = 0;
    ColorSet universe_ = 0;
    std::vector<ColorSet> phi_;
};

using RType = Type<Multicolor>;
using DirType = Type<Directed>;

/// Relabels so that new vertex a is old vertex order[a].
template <class Kind>
Type<Kind> reorder(const Type<Kind>& K, std::span<const std::size_t> order) {
    Type<Kind> out(order.size(), K.universe());
    for (std::size_t a = 0; a < order.size(); ++a) {
        out.set_vertex(a, K.vertex_set(order[a]));
        for (std::size_t b = a + 1; b < order.size(); ++b) out.set_pair(a, b, K.pair_set(order[a], order[b]));
    }
    return out;
}

/// Sub-type induced by the vertices in `subset` (kept in the given order).
template <class Kind>
Type<Kind> sub_type(const Type<Kind>& K, std::span<const std::size_t> subset) {
    if (subset.empty()) throw DomainError("sub_type needs a nonempty vertex subset");
    for (auto v : subset) {
        if (v >= K.size()) throw DomainError("sub_type vertex out of range");
    }
    return reorder(K, subset);
}

/// Lexicographically smallest encoding over all vertex orders.
template <class Kind>
std::vector<ColorSet> canonical_encoding(const Type<Kind>& K) {
    std::vector<std::size_t> order(K.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto best = K.encoding();
    while (std::next_permutation(order.begin(), order.end())) {
        auto e = reorder(K, order).encoding();
        if (e < best) best = std::move(e);
    }
    return best;
}

template <class Kind>
Type<Kind> canonical_form(const Type<Kind>& K) {
    std::vector<std::size_t> order(K.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Type<Kind> best = K;
    auto best_e = K.encoding();
    while (std::next_permutation(order.begin(), order.end())) {
        auto candidate = reorder(K, order);
        auto e = candidate.encoding();
        if (e < best_e) {
            best_e = std::move(e);
            best = std::move(candidate);
        }
    }
    return best;
}

namespace detail {

/// Does the encoding of K under `order` compare below K's own encoding?
template <class Kind>
bool beats_identity(const Type<Kind>& K, const std::vector<std::size_t>& order) {
    const std::size_t k = K.size();
    for (std::size_t a = 0; a < k; ++a) {
        const ColorSet x = K.vertex_set(order[a]);
        const ColorSet y = K.vertex_set(a);
        if (x != y) return x < y;
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const ColorSet x = K.pair_set(order[a], order[b]);
            const ColorSet y = K.pair_set(a, b);
            if (x != y) return x < y;
        }
    }
    return false;
}

}  // namespace detail

template <class Kind>
bool is_canonical(const Type<Kind>& K) {
    std::vector<std::size_t> order(K.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    while (std::next_permutation(order.begin(), order.end())) {
        if (detail::beats_identity(K, order)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Embeddings H -> K

namespace detail {

template <class Kind>
bool class_ok(const CompleteGraph<Kind>&, const std::vector<std::size_t>&, ColorSet) {
    return true;
}

/// Within one class of a dir-type: a vertex set with exactly one arrow
/// requires the arcs mapped there to be acyclic.
inline bool class_ok(const DiGraph& h, const std::vector<std::size_t>& members, ColorSet vertex_set) {
    if (popcount(vertex_set & arc_bits) != 1) return true;
    return is_acyclic(h, members);
}

template <class Kind>
bool within_ok(typename Kind::color_type c, ColorSet vertex_set) {
    if constexpr (Kind::directed) {
        if (c == Arc::forward || c == Arc::backward) return (vertex_set & arc_bits) != 0;
    }
    return contains(vertex_set, Kind::index(c));
}

}  // namespace detail

/// Searches for a map gamma: V(H) -> U (not necessarily injective) with every
/// pair color of H allowed by phi at the image. Returns the map if found.
template <class Kind>
std::optional<std::vector<std::size_t>> find_embedding(const CompleteGraph<Kind>& h, const Type<Kind>& K) {
    const std::size_t m = h.size();
    const std::size_t k = K.size();
    if (k == 0) {
        if (m == 0) return std::vector<std::size_t>{};
        return std::nullopt;
    }
    std::vector<std::size_t> gamma(m, 0);
    std::vector<std::vector<std::size_t>> classes(k);

    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == m) return true;
        for (std::size_t u = 0; u < k; ++u) {
            bool ok = true;
            for (std::size_t w = 0; w < v && ok; ++w) {
                const auto c = h.color(w, v);
                if (gamma[w] == u) {
                    ok = detail::within_ok<Kind>(c, K.vertex_set(u));
                } else {
                    ok = contains(K.pair_set(gamma[w], u), Kind::index(c));
                }
            }
            if (!ok) continue;
            gamma[v] = u;
            classes[u].push_back(v);
            if (detail::class_ok(h, classes[u], K.vertex_set(u)) && self(self, v + 1)) return true;
            classes[u].pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return gamma;
    return std::nullopt;
}

template <class Kind>
bool embeds(const CompleteGraph<Kind>& h, const Type<Kind>& K) {
    return find_embedding(h, K).has_value();
}

inline bool embeds_dir(const DiGraph& h, const DirType& K) { return embeds(h, K); }

/// K belongs to the admissible set K(H): no forbidden graph embeds in it.
template <class Kind>
bool in_admissible_set(const Type<Kind>& K, const Family<Kind>& family) {
    return std::none_of(family.forbidden.begin(), family.forbidden.end(),
                        [&](const auto& h) { return embeds(h, K); });
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationLimits {
    /// Refuse when the raw candidate count exceeds this.
    double ceiling = 5e7;
};

/// Vertex color sets considered by the enumeration: nonempty proper subsets
/// of the universe. A vertex set with a single arrow is always written with
/// "->", since "->" and "<-" on a vertex impose the same constraint.
template <class Kind>
std::vector<ColorSet> candidate_vertex_sets(ColorSet universe) {
    std::vector<ColorSet> out;
    for (unsigned s = 1; s < 256; ++s) {
        const auto cs = static_cast<ColorSet>(s);
        if ((cs & ~universe) != 0 || cs == universe) continue;
        if constexpr (Kind::directed) {
            if (contains(cs, 3) && !contains(cs, 2)) continue;
        }
        out.push_back(cs);
    }
    return out;
}

inline std::vector<ColorSet> candidate_pair_sets(ColorSet universe) {
    std::vector<ColorSet> out;
    for (unsigned s = 1; s < 256; ++s) {
        const auto cs = static_cast<ColorSet>(s);
        if ((cs & ~universe) == 0) out.push_back(cs);
    }
    return out;
}

/// Number of candidates the enumeration visits (vertex-set multisets times
/// pair-set assignments), summed over k = 1..kmax.
template <class Kind>
double raw_type_count(ColorSet universe, std::size_t kmax) {
    const double nv = static_cast<double>(candidate_vertex_sets<Kind>(universe).size());
    const double ne = static_cast<double>(candidate_pair_sets(universe).size());
    double total = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        double multisets = 1;  // C(nv + k - 1, k)
        for (std::size_t i = 0; i < k; ++i) multisets = multisets * (nv + static_cast<double>(i)) / static_cast<double>(i + 1);
        total += multisets * std::pow(ne, static_cast<double>(k * (k - 1) / 2));
    }
    return total;
}

class EnumerationGuard : public DomainError {
public:
    EnumerationGuard(double count, double ceiling)
        : DomainError("type enumeration needs about " + std::to_string(static_cast<long long>(count)) +
                      " candidates, above the ceiling of " + std::to_string(static_cast<long long>(ceiling))),
          count_(count) {}
    double count() const noexcept { return count_; }

private:
    double count_;
};

/// Visits every type on 1..kmax vertices over the universe exactly once up to
/// vertex permutation, ordered by k and then by canonical encoding.
template <class Kind, class Visit>
void for_each_type(ColorSet universe, std::size_t kmax, Visit&& visit, EnumerationLimits limits = {}) {
    if (kmax < 1) throw DomainError("kmax must be at least 1");
    const double raw = raw_type_count<Kind>(universe, kmax);
    if (raw > limits.ceiling) throw EnumerationGuard(raw, limits.ceiling);

    const auto vsets = candidate_vertex_sets<Kind>(universe);
    const auto esets = candidate_pair_sets(universe);
    for (std::size_t k = 1; k <= kmax; ++k) {
        Type<Kind> K(k, universe);
        const std::size_t npairs = k * (k - 1) / 2;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
        }
        // vertex sets nondecreasing
        auto rec_v = [&](auto&& self, std::size_t i, std::size_t from) -> void {
            if (i == k) {
                std::vector<std::size_t> ei(npairs, 0);
                for (std::size_t p = 0; p < npairs; ++p) K.set_pair(pairs[p].first, pairs[p].second, esets[0]);
                while (true) {
                    if (is_canonical(K)) visit(static_cast<const Type<Kind>&>(K));
                    // odometer, last pair fastest so encodings increase
                    std::size_t p = npairs;
                    while (p > 0) {
                        --p;
                        if (++ei[p] < esets.size()) {
                            K.set_pair(pairs[p].first, pairs[p].second, esets[ei[p]]);
                            break;
                        }
                        ei[p] = 0;
                        K.set_pair(pairs[p].first, pairs[p].second, esets[0]);
                        if (p == 0) return;
                    }
                    if (npairs == 0) return;
                }
            }
            for (std::size_t s = from; s < vsets.size(); ++s) {
                K.set_vertex(i, vsets[s]);
                self(self, i + 1, s);
            }
        };
        rec_v(rec_v, 0, 0);
    }
}

/// Every admissible type on at most kmax vertices, in enumeration order.
template <class Kind>
std::vector<Type<Kind>> enumerate_types(const Family<Kind>& family, std::size_t kmax, EnumerationLimits limits = {}) {
    family.validate();
    std::vector<Type<Kind>> out;
    for_each_type<Kind>(
        family.universe(), kmax,
        [&](const Type<Kind>& K) {
            if (in_admissible_set(K, family)) out.push_back(K);
        },
        limits);
    return out;
}

/// The type behind the simple editing algorithm for a spectrum tuple: one
/// vertex per refined part, every pair set equal to the universe, and vertex
/// sets that drop the color (or property) the part must avoid.
inline RType clique_type(const MulticolorFamily& family, const SpectrumTuple& t) {
    check_tuple(t, family);
    const int ell = tuple_sum(t);
    if (ell == 0) throw DomainError("clique type needs a nonzero tuple");
    RType K(static_cast<std::size_t>(ell), family.universe());
    std::size_t v = 0;
    for (std::size_t c = 0; c < t.size(); ++c) {
        for (int j = 0; j < t[c]; ++j) K.set_vertex(v++, static_cast<ColorSet>(family.universe() & ~(1u << c)));
    }
    return K;
}

inline DirType clique_type(const DirectedFamily& family, const SpectrumTuple& t) {
    check_tuple(t, family);
    const int ell = tuple_sum(t);
    if (ell == 0) throw DomainError("clique type needs a nonzero tuple");
    const ColorSet P = family.universe();
    const ColorSet drop[3] = {0b0001, 0b1000, 0b0010};  // o, <-, -
    DirType K(static_cast<std::size_t>(ell), P);
    std::size_t v = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        for (int j = 0; j < t[c]; ++j) K.set_vertex(v++, static_cast<ColorSet>(P & ~drop[c]));
    }
    return K;
}

template <class Kind>
std::string format_type(const Type<Kind>& K) {
    std::string out = "type k=" + std::to_string(K.size()) + "\n";
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = i; j < K.size(); ++j) {
            if (j > i) out += ' ';
            out += format_color_set<Kind>(K.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace edk

#endif  // EDK_TYPES_HPP
