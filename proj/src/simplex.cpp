#include "pwlvo/simplex.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

namespace pwlvo {

namespace {

std::atomic<std::uint64_t> g_lp_count{0};

// Dense tableau, minimization, Bland's rule for both the entering and the
// leaving choice so the exact pivoting always terminates under degeneracy.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), tab_(rows + 1, RatVec(cols + 1, Rat(0))), basis_(rows, 0) {}

    Rat& at(std::size_t i, std::size_t j) { return tab_[i][j]; }
    Rat& rhs(std::size_t i) { return tab_[i][n_]; }
    Rat& cost(std::size_t j) { return tab_[m_][j]; }
    Rat& cost_rhs() { return tab_[m_][n_]; }
    std::size_t rows() const { return m_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void drop_row(std::size_t i) {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
    }

    // removes the trailing columns [new_cols, n_); no basis index may point
    // into the removed block
    void truncate_columns(std::size_t new_cols) {
        for (RatVec& row : tab_) {
            row[new_cols] = row[n_];  // slide the rhs next to the kept block
            row.resize(new_cols + 1);
        }
        n_ = new_cols;
    }

    void pivot(std::size_t r, std::size_t j) {
        const Rat p = tab_[r][j];
        for (std::size_t c = 0; c <= n_; ++c) tab_[r][c] /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || tab_[i][j] == 0) continue;
            const Rat f = tab_[i][j];
            for (std::size_t c = 0; c <= n_; ++c) tab_[i][c] -= f * tab_[r][c];
        }
        basis_[r] = j;
    }

    // Runs simplex until optimal or unbounded. Columns in `banned` are never
    // selected as entering (used to freeze artificials in phase 2).
    bool solve_to_optimal(const std::vector<bool>& banned) {
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (banned[j]) continue;
                if (tab_[m_][j] < 0) { enter = j; break; }
            }
            if (enter == n_) return true;  // optimal

            std::size_t leave = m_;
            Rat best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                const Rat ratio = tab_[i][n_] / tab_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return false;  // unbounded
            pivot(leave, enter);
        }
    }

private:
    std::size_t m_, n_;
    RatMat tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::uint64_t lp_solve_count() { return g_lp_count.load(); }

LpResult lp_optimize(const RatVec& objective, Sense sense, const ConstraintList& rows) {
    g_lp_count.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = objective.size();
    for (const LinConstraint& row : rows) {
        if (row.rel == Rel::LT) throw std::invalid_argument("lp_optimize: strict row");
        if (row.coeffs.size() != n) throw std::invalid_argument("lp_optimize: row dim mismatch");
    }

    // Free variables split as x = u - w; one slack per LE row; one artificial
    // per row for phase 1.
    const std::size_t m = rows.size();
    std::size_t slack_count = 0;
    for (const LinConstraint& row : rows)
        if (row.rel == Rel::LE) ++slack_count;
    const std::size_t first_slack = 2 * n;
    const std::size_t first_art = first_slack + slack_count;
    const std::size_t total = first_art + m;

    Tableau tab(m, total);
    std::size_t slack_at = first_slack;
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = rows[i].rhs < 0;
        const Rat sgn = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) {
            tab.at(i, j) = sgn * rows[i].coeffs[j];
            tab.at(i, n + j) = -sgn * rows[i].coeffs[j];
        }
        if (rows[i].rel == Rel::LE) {
            tab.at(i, slack_at) = sgn;
            ++slack_at;
        }
        tab.at(i, first_art + i) = 1;
        tab.rhs(i) = sgn * rows[i].rhs;
        tab.basis()[i] = first_art + i;
    }

    // Phase 1: minimize the sum of artificials.
    for (std::size_t j = first_art; j < total; ++j) tab.cost(j) = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < total; ++c) tab.cost(c) -= tab.at(i, c);
        tab.cost_rhs() -= tab.rhs(i);
    }

    std::vector<bool> banned(total, false);
    if (!tab.solve_to_optimal(banned)) throw std::logic_error("phase 1 unbounded");
    if (-tab.cost_rhs() > 0) return LpResult{LpStatus::Infeasible, Rat(0), {}};

    // Drive artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t i = tab.rows(); i-- > 0;) {
        if (tab.basis()[i] < first_art) continue;
        std::size_t pivot_col = total;
        for (std::size_t j = 0; j < first_art; ++j) {
            if (tab.at(i, j) != 0) { pivot_col = j; break; }
        }
        if (pivot_col == total) {
            tab.drop_row(i);
        } else {
            tab.pivot(i, pivot_col);
        }
    }
    tab.truncate_columns(first_art);
    banned.resize(first_art);

    // Phase 2 with the real objective on the structural and slack columns.
    const Rat obj_sgn = (sense == Sense::Max) ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j <= first_art; ++j) tab.cost(j) = 0;
    for (std::size_t j = 0; j < n; ++j) {
        tab.cost(j) = obj_sgn * objective[j];
        tab.cost(n + j) = -obj_sgn * objective[j];
    }
    for (std::size_t i = 0; i < tab.rows(); ++i) {
        const Rat f = tab.cost(tab.basis()[i]);
        if (f == 0) continue;
        for (std::size_t c = 0; c < first_art; ++c) tab.cost(c) -= f * tab.at(i, c);
        tab.cost_rhs() -= f * tab.rhs(i);
    }
    if (!tab.solve_to_optimal(banned)) return LpResult{LpStatus::Unbounded, Rat(0), {}};

    RatVec split(2 * n, Rat(0));
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] < 2 * n) split[tab.basis()[i]] = tab.rhs(i);
    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = split[j] - split[n + j];

    LpResult result;
    result.status = LpStatus::Optimal;
    result.value = dot(objective, x);
    result.point = std::move(x);
    return result;
}

StrictResult strict_feasible(const ConstraintList& rows, std::size_t dim) {
    bool any_strict = false;
    for (const LinConstraint& row : rows) any_strict = any_strict || row.rel == Rel::LT;
    if (!any_strict) {  // plain feasibility, no slack variable needed
        const LpResult lp = lp_optimize(zero_vec(dim), Sense::Min, rows);
        StrictResult res;
        if (lp.status == LpStatus::Optimal) {
            res.feasible = true;
            res.witness = lp.point;
        }
        return res;
    }

    ConstraintList relaxed;
    relaxed.reserve(rows.size() + 1);
    for (const LinConstraint& row : rows) {
        if (row.coeffs.size() != dim) throw std::invalid_argument("strict_feasible: row dim mismatch");
        LinConstraint r;
        r.coeffs = row.coeffs;
        r.coeffs.push_back(row.rel == Rel::LT ? Rat(1) : Rat(0));
        r.rhs = row.rhs;
        r.rel = (row.rel == Rel::EQ) ? Rel::EQ : Rel::LE;
        relaxed.push_back(std::move(r));
    }
    {
        LinConstraint cap;  // eps <= 1 keeps the objective bounded
        cap.coeffs = zero_vec(dim);
        cap.coeffs.push_back(Rat(1));
        cap.rhs = 1;
        cap.rel = Rel::LE;
        relaxed.push_back(std::move(cap));
    }
    RatVec objective = zero_vec(dim);
    objective.push_back(Rat(1));

    const LpResult lp = lp_optimize(objective, Sense::Max, relaxed);
    if (lp.status == LpStatus::Infeasible) return {};
    if (lp.status != LpStatus::Optimal) throw std::logic_error("strict_feasible: unbounded slack");
    if (lp.value <= 0) return {};

    StrictResult res;
    res.feasible = true;
    res.witness.assign(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(dim));
    return res;
}

}  // namespace pwlvo
