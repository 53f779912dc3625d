#ifndef PWLVO_SOLVER_HPP
#define PWLVO_SOLVER_HPP

#include "pwlvo/cone.hpp"
#include "pwlvo/pwl.hpp"
#include "pwlvo/semiclosed.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwlvo {

class all_empty_error : public std::runtime_error {
public:
    all_empty_error() : std::runtime_error("every image piece is empty") {}
};

class empty_interior_error : public std::runtime_error {
public:
    empty_interior_error() : std::runtime_error("the ordering cone has empty interior") {}
};

class strict_rows_error : public std::invalid_argument {
public:
    strict_rows_error() : std::invalid_argument("certificate defined for closed pieces only") {}
};

class method_disagreement_error : public std::runtime_error {
public:
    method_disagreement_error()
        : std::runtime_error("weak frontier routes disagree on the decomposition") {}
};

enum class FrontierKind { Efficient, WeaklyEfficient };

struct FrontierDecomposition {
    Region image_pieces;
    FrontierKind kind = FrontierKind::Efficient;
};

// Frontier of Q = union(M_k + K) under domination by K minus its lineality:
// Q minus the sums M_k + C_j over the strict cone pieces C_j.
FrontierDecomposition efficient_frontier(const std::vector<VPolyhedron>& Ms,
                                         const OrderingCone& K);

// Weak frontier Q minus (Q + int K), assembled row by row: every facet row of
// M_k + K recedes along K, so each H + int K collapses to the open halfspace
// of the row and Q minus it splits into closed pieces over the M_{k1} + K.
FrontierDecomposition weak_frontier_paper(const std::vector<VPolyhedron>& Ms,
                                          const OrderingCone& K);

// Same set through the one-shot route Q minus the sums M_k + int K; used to
// cross-check the row-by-row assembly.
Region weak_frontier_generic(const std::vector<VPolyhedron>& Ms, const OrderingCone& K);

enum class HalfspaceSumKind { OpenHalfspace, WholeSpace, Empty };

struct HalfspaceSumResult {
    HalfspaceSumKind kind = HalfspaceSumKind::WholeSpace;
    LinConstraint open;  // strict row when kind == OpenHalfspace
};

// H + int H_j for a closed halfspace H = {a.y <= b} and a cone row: empty or
// everything when a = 0, the open halfspace {a.y < b} when the kernels agree
// with a positive factor, everything otherwise.
HalfspaceSumResult halfspace_plus_open(const LinConstraint& H, const RatVec& cone_row);

// H + int K for the whole cone: the open halfspace exactly when a is
// nonpositive on all of K (true of every valid row of an M + K sum).
HalfspaceSumResult halfspace_plus_interior(const LinConstraint& H, const OrderingCone& K);

struct PullbackProvenance {
    std::size_t piece_index = 0;     // k, the piece of f
    std::size_t frontier_index = 0;  // j, the frontier piece
};

struct Pullback {
    Region region;
    std::vector<PullbackProvenance> provenance;  // aligned with region.pieces
};

// Decision-space preimage D intersect P_k intersect T_k^{-1}(piece - b_k),
// strict rows preserved by substitution.
Pullback pull_back(const FrontierDecomposition& frontier, const Problem& problem);

// Replaces the objective by its projection onto the complement of the cone's
// lineality space and the cone by its pointed part; the efficient solution
// set is unchanged.
Problem quotient_reduce(const Problem& problem);

struct ConnectivityCertificate {
    bool certified = false;  // exact for closed decompositions only
    bool connected = true;
    std::vector<std::vector<std::size_t>> components;
};

// Intersection-graph components of a closed decomposition; throws
// strict_rows_error when a piece carries strict rows.
ConnectivityCertificate connectivity_certificate(const Region& R);

// Components of the closed relaxations, reported as non-certified.
ConnectivityCertificate connectivity_descriptive(const Region& R);

enum class WeakMethod { Paper, Generic, Both };

struct SolveStats {
    std::uint64_t lp_count = 0;
    std::size_t image_piece_count = 0;
    std::size_t sol_piece_count = 0;
    std::size_t wsol_piece_count = 0;
};

struct SolveReport {
    bool convex = false;
    Region sol;
    std::optional<Region> wsol;
    std::string wsol_omitted_reason;
    bool sol_closed = false;  // no strict rows survive in sol
    ConnectivityCertificate sol_connectivity;
    ConnectivityCertificate wsol_connectivity;
    std::vector<PullbackProvenance> sol_provenance;
    std::vector<PullbackProvenance> wsol_provenance;
    SolveStats stats;
};

SolveReport solve(const Problem& problem, WeakMethod method = WeakMethod::Paper);

// Exact set equality of two decompositions (mutual emptiness of differences).
bool decomposition_equal(const Region& A, const Region& B);

}  // namespace pwlvo

#endif
