#ifndef PWLVO_SIMPLEX_HPP
#define PWLVO_SIMPLEX_HPP

#include "pwlvo/constraint.hpp"
#include "pwlvo/rational.hpp"

#include <cstdint>
#include <vector>

namespace pwlvo {

enum class Sense { Min, Max };

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;     // objective value in the caller's sense (Optimal only)
    RatVec point;  // an optimal point (Optimal only)
};

// Exact two-phase simplex over the rationals with Bland's rule. Variables are
// free; rows must be EQ or LE (LT rows are rejected, see strict_feasible).
LpResult lp_optimize(const RatVec& objective, Sense sense, const ConstraintList& rows);

struct StrictResult {
    bool feasible = false;
    RatVec witness;  // satisfies every row with its own relation when feasible
};

// Decides whether a mixed strict/non-strict system has a solution. Strict rows
// a.x < b are tightened to a.x + eps <= b and eps is maximized (capped at 1);
// the system is strictly feasible exactly when the optimum eps is positive.
StrictResult strict_feasible(const ConstraintList& rows, std::size_t dim);

// Number of simplex solves since process start; diagnostics only.
std::uint64_t lp_solve_count();

}  // namespace pwlvo

#endif
