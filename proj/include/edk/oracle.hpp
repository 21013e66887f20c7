#ifndef EDK_ORACLE_HPP
#define EDK_ORACLE_HPP

#include "edk/distfun.hpp"
#include "edk/editing.hpp"
#include "edk/graph.hpp"
#include "edk/parallel.hpp"
#include "edk/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace edk {

/// Largest n exact_dist accepts: 9 for multicolor graphs, 8 for digraphs,
/// unless EDK_GUARD_N says otherwise.
template <class Kind>
std::size_t oracle_guard() {
    std::size_t guard = Kind::directed ? 8 : 9;
    if (const char* env = std::getenv("EDK_GUARD_N"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            static bool warned = false;
            if (!warned) {
                std::cerr << "warning: EDK_GUARD_N overrides the oracle size guard (" << guard << " -> " << v << ")\n";
                warned = true;
            }
            guard = static_cast<std::size_t>(v);
        }
    }
    return guard;
}

template <class Kind>
struct ExactDist {
    std::size_t edits = 0;
    CompleteGraph<Kind> witness;
};

namespace detail {

template <class Kind>
class BranchAndBound {
public:
    BranchAndBound(const CompleteGraph<Kind>& g, const Family<Kind>& family) : family_(family), g_(g), fixed_(g.num_pairs(), 0) {
        if constexpr (Kind::directed) {
            for (unsigned c = 0; c < 4; ++c) {
                if (family.palette.allows(Directed::from_index(c))) colors_.push_back(Directed::from_index(c));
            }
        } else {
            for (int c = 1; c <= family.r; ++c) colors_.push_back(static_cast<std::uint8_t>(c));
        }
        best_ = g.num_pairs() + 1;
    }

    ExactDist<Kind> run() {
        search(0);
        if (!witness_) throw DomainError("no member of the property has this many vertices");
        return {best_, *witness_};
    }

private:
    using Copy = std::vector<std::size_t>;  // pair indices of one forbidden copy

    /// All forbidden copies, as their unfixed pair indices. Sets `dead` if a
    /// copy has every pair fixed.
    std::vector<Copy> open_copies(bool& dead) const {
        std::vector<Copy> out;
        dead = false;
        for (const auto& h : family_.forbidden) {
            for_each_induced(g_, h, [&](std::span<const std::size_t> m) {
                Copy c;
                for (std::size_t a = 0; a < m.size(); ++a) {
                    for (std::size_t b = a + 1; b < m.size(); ++b) {
                        const std::size_t e = g_.pair_index(std::min(m[a], m[b]), std::max(m[a], m[b]));
                        if (!fixed_[e]) c.push_back(e);
                    }
                }
                if (c.empty()) {
                    dead = true;
                    return true;
                }
                std::sort(c.begin(), c.end());
                c.erase(std::unique(c.begin(), c.end()), c.end());
                out.push_back(std::move(c));
                return false;
            });
            if (dead) break;
        }
        return out;
    }

    /// Copies pairwise disjoint on unfixed pairs each need their own edit.
    static std::size_t packing_bound(std::vector<Copy>& copies, std::size_t pairs) {
        std::sort(copies.begin(), copies.end(), [](const Copy& a, const Copy& b) { return a.size() < b.size(); });
        std::vector<char> used(pairs, 0);
        std::size_t count = 0;
        for (const auto& c : copies) {
            if (std::any_of(c.begin(), c.end(), [&](std::size_t e) { return used[e]; })) continue;
            for (auto e : c) used[e] = 1;
            ++count;
        }
        return count;
    }

    void search(std::size_t edits) {
        if (edits >= best_) return;
        bool dead = false;
        auto copies = open_copies(dead);
        if (dead) return;
        if (copies.empty()) {
            best_ = edits;
            witness_ = g_;
            return;
        }
        if (edits + packing_bound(copies, g_.num_pairs()) >= best_) return;
        // after sorting, copies[0] has the fewest unfixed pairs
        const Copy pivot = copies[0];
        std::vector<std::size_t> newly_fixed;
        for (std::size_t e : pivot) {
            const auto [x, y] = endpoints(e);
            const auto old = g_.color(x, y);
            fixed_[e] = 1;
            for (auto c : colors_) {
                if (c == old) continue;
                g_.set_color(x, y, c);
                search(edits + 1);
            }
            g_.set_color(x, y, old);
            // later branches keep this pair as it was
            newly_fixed.push_back(e);
        }
        for (auto e : newly_fixed) fixed_[e] = 0;
    }

    std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const {
        const std::size_t n = g_.size();
        std::size_t i = 0;
        while (e >= n - 1 - i) {
            e -= n - 1 - i;
            ++i;
        }
        return {i, i + 1 + e};
    }

    const Family<Kind>& family_;
    CompleteGraph<Kind> g_;
    std::vector<char> fixed_;
    std::vector<typename Kind::color_type> colors_;
    std::size_t best_;
    std::optional<CompleteGraph<Kind>> witness_;
};

}  // namespace detail

/// Fewest pair recolorings that turn g into a member of the property.
template <class Kind>
ExactDist<Kind> exact_dist(const CompleteGraph<Kind>& g, const Family<Kind>& family) {
    family.validate();
    const std::size_t guard = oracle_guard<Kind>();
    if (g.size() > guard) {
        throw DomainError("exact distance refused for n=" + std::to_string(g.size()) + " (guard n <= " + std::to_string(guard) +
                          "; set EDK_GUARD_N to override)");
    }
    if constexpr (Kind::directed) {
        for (auto c : g.pairs()) {
            if (!family.palette.allows(c)) throw DomainError("graph uses a color outside the palette");
        }
    } else {
        if (g.num_colors() != family.r) throw DomainError("graph and property use different r");
    }
    return detail::BranchAndBound<Kind>(g, family).run();
}

// ---------------------------------------------------------------------------
// Monte Carlo estimation of dist_n(p, H)

enum class EstimateMode { exact, algorithmic };

struct Statistics {
    std::size_t trials = 0;
    double mean = 0, sd = 0, min = 0, max = 0;
    std::vector<Rational> samples;  // normalized distance per trial, in trial order
};

inline Statistics summarize(std::vector<Rational> samples) {
    Statistics s;
    s.trials = samples.size();
    if (samples.empty()) return s;
    double sum = 0;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -s.min;
    for (const auto& x : samples) {
        const double d = x.get_d();
        sum += d;
        s.min = std::min(s.min, d);
        s.max = std::max(s.max, d);
    }
    s.mean = sum / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double sq = 0;
        for (const auto& x : samples) sq += (x.get_d() - s.mean) * (x.get_d() - s.mean);
        s.sd = std::sqrt(sq / static_cast<double>(samples.size() - 1));
    }
    s.samples = std::move(samples);
    return s;
}

template <class Kind>
CompleteGraph<Kind> sample_graph(std::size_t n, const Density<Kind>& p, std::uint64_t seed) {
    if constexpr (Kind::directed) return sample_digraph(n, p, seed);
    else return sample_rgraph(n, p, seed);
}

/// Samples `trials` graphs from G(n, p) and reports the normalized distance:
/// exact (branch and bound) or the edit count of the partition editor driven
/// by the dist_upper certificate at p. Trial t uses derive_seed(seed, t), and
/// the editor in algorithmic mode uses derive_seed of that.
template <class Kind>
Statistics estimate_dist(std::size_t n, const Density<Kind>& p, const Family<Kind>& family, std::size_t trials, std::uint64_t seed,
                         std::size_t kmax, EstimateMode mode, unsigned jobs = 1) {
    if (n < 2) throw DomainError("estimation needs n >= 2");
    detail::check_density(family, p);
    if (mode == EstimateMode::exact && n > oracle_guard<Kind>()) {
        throw DomainError("exact mode refused for n=" + std::to_string(n) + "; use algorithmic mode or EDK_GUARD_N");
    }
    std::optional<DistBound<Kind>> cert;
    if (mode == EstimateMode::algorithmic) cert = dist_upper(family, p, kmax, jobs);
    const Rational pairs(static_cast<long>(choose2(n)));
    std::vector<Rational> out(trials);
    parallel_for(trials, jobs, [&](std::size_t t) {
        const std::uint64_t s = derive_seed(seed, t);
        auto g = sample_graph<Kind>(n, p, s);
        std::size_t edits = 0;
        if (mode == EstimateMode::exact) {
            edits = exact_dist(g, family).edits;
        } else {
            edits = edit_by_any_type(g, *cert->type, cert->weights, derive_seed(s, 0)).changes;
        }
        out[t] = Rational(static_cast<long>(edits)) / pairs;
    });
    return summarize(std::move(out));
}

}  // namespace edk

#endif  // EDK_ORACLE_HPP
