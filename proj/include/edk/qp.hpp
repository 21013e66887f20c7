#ifndef EDK_QP_HPP
#define EDK_QP_HPP

#include "edk/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace edk {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t k, const Rational& fill = 0) : k_(k), a_(k * k, fill) {}

    std::size_t size() const noexcept { return k_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = i + 1; j < k_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t k_ = 0;
    std::vector<Rational> a_;
};

/// Solves A x = b exactly by Gauss-Jordan elimination; nullopt if A is singular.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = 1 / A[col][col];
        for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col] == 0) continue;
            const Rational f = A[i][col];
            for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

/// Quadratic form w^T M w.
inline Rational quadratic_form(const RationalMatrix& M, const std::vector<Rational>& w) {
    Rational total = 0;
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (w[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < M.size(); ++j) row += M(i, j) * w[j];
        total += w[i] * row;
    }
    return total;
}

/// Average of all k^2 entries: the quadratic form at the uniform weights.
inline Rational f_value(const RationalMatrix& M) {
    if (M.size() == 0) throw DomainError("f_value of an empty matrix");
    Rational total = 0;
    for (std::size_t i = 0; i < M.size(); ++i) {
        for (std::size_t j = 0; j < M.size(); ++j) total += M(i, j);
    }
    return total / Rational(static_cast<long>(M.size() * M.size()));
}

struct SimplexMin {
    Rational value;
    std::vector<Rational> weights;  // nonnegative, sums to 1
};

/// Global minimum of w^T M w over the probability simplex.
///
/// Every local minimizer with support S satisfies (Mw)_i = lambda on S and
/// sum w = 1, so each support's stationarity system is solved exactly and
/// the nonnegative solutions are compared. Singular systems are skipped: on a
/// singular support the objective is constant along the solution set and the
/// same value reappears on a smaller support. Cost is 2^k small solves.
inline SimplexMin g_value(const RationalMatrix& M) {
    const std::size_t k = M.size();
    if (k == 0) throw DomainError("g_value of an empty matrix");
    if (k > 20) throw DomainError("g_value support enumeration limited to k <= 20");
    std::optional<SimplexMin> best;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) support.push_back(i);
        }
        const std::size_t s = support.size();
        // unknowns: w_S (s of them) and lambda
        std::vector<std::vector<Rational>> A(s + 1, std::vector<Rational>(s + 1, 0));
        std::vector<Rational> b(s + 1, 0);
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t c = 0; c < s; ++c) A[a][c] = M(support[a], support[c]);
            A[a][s] = -1;
            A[s][a] = 1;
        }
        b[s] = 1;
        auto sol = solve_linear(std::move(A), std::move(b));
        if (!sol) continue;
        bool feasible = true;
        for (std::size_t a = 0; a < s; ++a) {
            if ((*sol)[a] < 0) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        const Rational& lambda = (*sol)[s];
        if (!best || lambda < best->value) {
            SimplexMin cand;
            cand.value = lambda;
            cand.weights.assign(k, Rational(0));
            for (std::size_t a = 0; a < s; ++a) cand.weights[support[a]] = (*sol)[a];
            best = std::move(cand);
        }
    }
    // the singleton supports are never singular, so best is always set
    return *best;
}

}  // namespace edk

#endif  // EDK_QP_HPP
