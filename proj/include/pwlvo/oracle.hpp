#ifndef PWLVO_ORACLE_HPP
#define PWLVO_ORACLE_HPP

#include "pwlvo/pwl.hpp"
#include "pwlvo/solver.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace pwlvo {

// Rational evaluation grid: per-coordinate interval and number of steps.
struct GridSpec {
    std::vector<std::pair<Rat, Rat>> box;
    std::vector<std::size_t> steps;
};

class not_feasible_error : public std::runtime_error {
public:
    not_feasible_error() : std::runtime_error("point outside the feasible set") {}
};

// Pointwise efficiency decisions straight from the definitions: u fails iff
// some piece holds a feasible x whose value is dominated against f(u), one
// strict system per piece and cone row. Deliberately independent of the set
// algebra in the solver; only the LP layer and eval are used.
bool is_efficient(const RatVec& u, const Problem& problem);
bool is_weakly_efficient(const RatVec& u, const Problem& problem);

struct CrosscheckMismatch {
    RatVec point;
    bool oracle_sol = false, decomp_sol = false;
    bool oracle_wsol = false, decomp_wsol = false;
};

struct CrosscheckResult {
    std::vector<CrosscheckMismatch> mismatches;
    std::size_t checked = 0;
};

std::vector<RatVec> grid_points_of(const GridSpec& grid);

// Compares oracle classifications with decomposition membership on every
// feasible grid point; points outside the feasible set are skipped.
CrosscheckResult grid_crosscheck(const Problem& problem, const SolveReport& report,
                                 const GridSpec& grid);

}  // namespace pwlvo

#endif
