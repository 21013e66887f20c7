#ifndef EDK_LP_HPP
#define EDK_LP_HPP

#include "edk/rational.hpp"

#include <optional>
#include <vector>

namespace edk {

enum class Relation { less_equal, equal, greater_equal };

/// maximize c^T x  subject to  a_i^T x (<=|=|>=) b_i,  x >= 0.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Relation> relations;
    std::vector<Rational> rhs;

    void add(std::vector<Rational> row, Relation rel, Rational b) {
        rows.push_back(std::move(row));
        relations.push_back(rel);
        rhs.push_back(std::move(b));
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> x;
};

namespace detail {

/// Dense simplex tableau with Bland's rule; exact, so no tolerances.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1, 0)), basis_(rows, 0) {}

    Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    Rational& rhs(std::size_t i) { return t_[i].back(); }
    std::size_t rows() const { return t_.size(); }
    std::size_t cols() const { return t_.empty() ? 0 : t_[0].size() - 1; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / t_[r][c];
        for (auto& x : t_[r]) x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j < t_[i].size(); ++j) {
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
            }
        }
        basis_[r] = c;
    }

    /// Maximizes cost^T x over the current basis; columns with allowed[j] == false never enter.
    /// Returns false when unbounded.
    bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        while (true) {
            // reduced cost of column j: cost_j - sum_i cost_{basis_i} t_ij
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols() && !enter; ++j) {
                if (!allowed[j]) continue;
                Rational rc = cost[j];
                for (std::size_t i = 0; i < rows(); ++i) {
                    if (t_[i][j] != 0) rc -= cost[basis_[i]] * t_[i][j];
                }
                if (rc > 0) enter = j;
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (t_[i][*enter] <= 0) continue;
                Rational ratio = t_[i].back() / t_[i][*enter];
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void drop_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Two-phase primal simplex in exact rational arithmetic.
inline LpSolution solve(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();

    // column layout: x (n) | slack/surplus (one per inequality) | artificials
    std::vector<std::size_t> slack_col(m, 0), art_col(m, 0);
    std::vector<bool> has_slack(m, false), has_art(m, false);
    std::vector<int> sign(m, 1);
    std::size_t cols = n;
    for (std::size_t i = 0; i < m; ++i) {
        Relation rel = lp.relations[i];
        if (lp.rhs[i] < 0) {
            sign[i] = -1;
            if (rel == Relation::less_equal) rel = Relation::greater_equal;
            else if (rel == Relation::greater_equal) rel = Relation::less_equal;
        }
        if (rel != Relation::equal) {
            has_slack[i] = true;
            slack_col[i] = cols++;
        }
        if (rel != Relation::less_equal) has_art[i] = true;
    }
    const std::size_t first_art = cols;
    for (std::size_t i = 0; i < m; ++i) {
        if (has_art[i]) art_col[i] = cols++;
    }

    detail::Tableau T(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        Relation rel = lp.relations[i];
        if (sign[i] < 0 && rel != Relation::equal) {
            rel = rel == Relation::less_equal ? Relation::greater_equal : Relation::less_equal;
        }
        for (std::size_t j = 0; j < n; ++j) T.at(i, j) = sign[i] * lp.rows[i][j];
        T.rhs(i) = sign[i] * lp.rhs[i];
        if (has_slack[i]) T.at(i, slack_col[i]) = rel == Relation::less_equal ? 1 : -1;
        if (has_art[i]) {
            T.at(i, art_col[i]) = 1;
            T.basis()[i] = art_col[i];
        } else {
            T.basis()[i] = slack_col[i];
        }
    }

    std::vector<bool> allowed(cols, true);
    if (first_art < cols) {
        std::vector<Rational> phase1(cols, 0);
        for (std::size_t j = first_art; j < cols; ++j) phase1[j] = -1;
        T.maximize(phase1, allowed);
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < T.rows(); ++i) {
            if (T.basis()[i] >= first_art) infeasibility += T.rhs(i);
        }
        if (infeasibility != 0) return {LpStatus::infeasible, 0, {}};
        // drive zero-level artificials out of the basis
        for (std::size_t i = 0; i < T.rows();) {
            if (T.basis()[i] < first_art) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_art && !col; ++j) {
                if (T.at(i, j) != 0) col = j;
            }
            if (col) {
                T.pivot(i, *col);
                ++i;
            } else {
                T.drop_row(i);
            }
        }
        for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
    }

    std::vector<Rational> cost(cols, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
    if (!T.maximize(cost, allowed)) return {LpStatus::unbounded, 0, {}};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < T.rows(); ++i) {
        if (T.basis()[i] < n) sol.x[T.basis()[i]] = T.rhs(i);
    }
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
    return sol;
}

}  // namespace edk

#endif  // EDK_LP_HPP
