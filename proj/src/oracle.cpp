#include "pwlvo/oracle.hpp"

#include "pwlvo/simplex.hpp"

namespace pwlvo {

namespace {

// System deciding whether some x in D cap P_k dominates the value fu, with
// the rows indexed by `strict_row` strict (all of them when strict_row is
// the row count, meaning interior domination).
bool dominated_through_piece(const Problem& problem, const RatVec& fu, std::size_t k,
                             std::size_t strict_row) {
    const Piece& piece = problem.f.pieces[k];
    ConstraintList rows;
    for (const LinConstraint& c : problem.feasible.all_rows()) rows.push_back(c);
    for (const LinConstraint& c : piece.domain.all_rows()) rows.push_back(c);

    const bool all_strict = strict_row == problem.cone.rows.size();
    for (std::size_t i = 0; i < problem.cone.rows.size(); ++i) {
        const RatVec& yi = problem.cone.rows[i];
        LinConstraint c;
        c.coeffs = scale(vec_mat(yi, piece.map), Rat(-1));
        c.rhs = dot(yi, piece.offset) - dot(yi, fu);
        c.rel = (all_strict || i == strict_row) ? Rel::LT : Rel::LE;
        rows.push_back(std::move(c));
    }
    return strict_feasible(rows, problem.f.source_dim).feasible;
}

}  // namespace

bool is_efficient(const RatVec& u, const Problem& problem) {
    if (!contains(problem.feasible, u)) throw not_feasible_error();
    const RatVec fu = eval(problem.f, u);
    for (std::size_t k = 0; k < problem.f.pieces.size(); ++k)
        for (std::size_t j = 0; j < problem.cone.rows.size(); ++j)
            if (dominated_through_piece(problem, fu, k, j)) return false;
    return true;
}

bool is_weakly_efficient(const RatVec& u, const Problem& problem) {
    if (!contains(problem.feasible, u)) throw not_feasible_error();
    const RatVec fu = eval(problem.f, u);
    for (std::size_t k = 0; k < problem.f.pieces.size(); ++k)
        if (dominated_through_piece(problem, fu, k, problem.cone.rows.size())) return false;
    return true;
}

std::vector<RatVec> grid_points_of(const GridSpec& grid) {
    if (grid.box.size() != grid.steps.size())
        throw std::invalid_argument("grid: box/steps length mismatch");
    std::vector<RatVec> pts{RatVec{}};
    for (std::size_t d = 0; d < grid.box.size(); ++d) {
        if (grid.steps[d] == 0) throw std::invalid_argument("grid: steps must be positive");
        const Rat lo = grid.box[d].first;
        const Rat span = grid.box[d].second - lo;
        std::vector<RatVec> next;
        for (const RatVec& p : pts) {
            for (std::size_t s = 0; s <= grid.steps[d]; ++s) {
                RatVec q = p;
                q.push_back(lo + span * Rat(static_cast<long>(s),
                                            static_cast<long>(grid.steps[d])));
                next.push_back(std::move(q));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

CrosscheckResult grid_crosscheck(const Problem& problem, const SolveReport& report,
                                 const GridSpec& grid) {
    if (grid.box.size() != problem.f.source_dim)
        throw std::invalid_argument("grid dims do not match the source space");
    CrosscheckResult out;
    for (const RatVec& u : grid_points_of(grid)) {
        if (!contains(problem.feasible, u)) continue;
        ++out.checked;
        CrosscheckMismatch record;
        record.point = u;
        record.oracle_sol = is_efficient(u, problem);
        record.decomp_sol = region_contains(report.sol, u);
        bool bad = record.oracle_sol != record.decomp_sol;
        if (report.wsol.has_value()) {
            record.oracle_wsol = is_weakly_efficient(u, problem);
            record.decomp_wsol = region_contains(*report.wsol, u);
            bad = bad || record.oracle_wsol != record.decomp_wsol;
        }
        if (bad) out.mismatches.push_back(std::move(record));
    }
    return out;
}

}  // namespace pwlvo
