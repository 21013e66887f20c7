#ifndef EDK_RANDOM_HPP
#define EDK_RANDOM_HPP

#include "edk/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace edk {

using Rng = std::mt19937_64;

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 finalizer),
/// so trial outcomes do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Draws index i with probability weights[i] (nonnegative, summing to 1).
/// Exact when the common denominator fits in 64 bits.
class DiscreteRational {
public:
    explicit DiscreteRational(const std::vector<Rational>& weights) {
        if (weights.empty()) throw DomainError("empty weight vector");
        Rational sum = 0;
        mpz_class den = 1;
        for (const auto& w : weights) {
            if (w < 0) throw DomainError("weights must be nonnegative");
            sum += w;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
        }
        if (sum != 1) throw DomainError("weights must sum to 1");
        exact_ = den.fits_ulong_p() && sizeof(unsigned long) >= 8;
        if (exact_) {
            total_ = den.get_ui();
            std::uint64_t acc = 0;
            for (const auto& w : weights) {
                mpz_class num = w.get_num() * (den / w.get_den());
                acc += num.get_ui();
                cumulative_.push_back(acc);
            }
        } else {
            std::vector<double> d;
            for (const auto& w : weights) d.push_back(w.get_d());
            fallback_ = std::discrete_distribution<std::size_t>(d.begin(), d.end());
        }
    }

    std::size_t operator()(Rng& rng) {
        if (!exact_) return fallback_(rng);
        const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, total_ - 1)(rng);
        return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), x) - cumulative_.begin());
    }

private:
    bool exact_ = false;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> cumulative_;
    std::discrete_distribution<std::size_t> fallback_;
};

/// Each vertex lands in part i independently with probability w[i].
inline std::vector<std::size_t> sample_partition(std::size_t n, const std::vector<Rational>& w, Rng& rng) {
    DiscreteRational pick(w);
    std::vector<std::size_t> part(n);
    for (auto& p : part) p = pick(rng);
    return part;
}

/// rank[v] = position of v in a uniformly random order.
inline std::vector<std::size_t> sample_order(std::size_t n, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
    return rank;
}

/// G(n, p): every pair independently gets color rho with probability p_rho.
inline ColoredGraph sample_rgraph(std::size_t n, const DensityVector& p, std::uint64_t seed) {
    Rng rng(seed);
    DiscreteRational pick(p.entries());
    ColoredGraph g(n, p.r(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, Multicolor::from_index(static_cast<unsigned>(pick(rng))));
    }
    return g;
}

/// Directed analogue: o with 1-p-2q, - with p, each arrow with q.
inline DiGraph sample_digraph(std::size_t n, const DirDensity& d, std::uint64_t seed) {
    Rng rng(seed);
    DiscreteRational pick({d.none(), d.p, d.q, d.q});
    DiGraph g(n, 4, Arc::none);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, Directed::from_index(static_cast<unsigned>(pick(rng))));
    }
    return g;
}

}  // namespace edk

#endif  // EDK_RANDOM_HPP
