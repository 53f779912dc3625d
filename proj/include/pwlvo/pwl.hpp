#ifndef PWLVO_PWL_HPP
#define PWLVO_PWL_HPP

#include "pwlvo/cone.hpp"
#include "pwlvo/polyhedron.hpp"
#include "pwlvo/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pwlvo {

// One affine piece: f(x) = map x + offset on the domain.
struct Piece {
    HPolyhedron domain;
    RatMat map;
    RatVec offset;
};

struct PiecewiseLinearFn {
    std::size_t source_dim = 0;
    std::size_t image_dim = 0;
    std::vector<Piece> pieces;
};

struct Problem {
    PiecewiseLinearFn f;
    HPolyhedron feasible;
    OrderingCone cone;
};

class empty_feasible_error : public std::runtime_error {
public:
    empty_feasible_error() : std::runtime_error("feasible set is empty") {}
};

struct CoverCheck {
    bool ok = false;
    RatVec gap_witness;  // a point outside every piece when not ok
};

// The piece domains must cover the whole source space.
CoverCheck validate_cover(const PiecewiseLinearFn& f);

struct ConsistencyCheck {
    bool ok = false;
    std::size_t piece_k = 0, piece_l = 0;
    RatVec witness;  // a point of the overlap where the two maps disagree
};

// Every pair of pieces must agree on its domain intersection; agreement is
// checked on the generators of the intersection, which extends affinely.
ConsistencyCheck validate_consistency(const PiecewiseLinearFn& f);

// Value at x through any piece containing it (consistency makes the choice
// irrelevant). Requires a validated cover.
RatVec eval(const PiecewiseLinearFn& f, const RatVec& x);

struct KFunctionCheck {
    bool yes = false;
    std::size_t row_j = 0, piece_k = 0, piece_l = 0;
    RatVec witness;  // a point of D/P_k where the piece-l affine lies below
};

// Decides whether f is a K-function on D: for every cone row j the scalar
// function <row_j, f(.)> must be concave on D, i.e. on every piece that meets
// D full-dimensionally the own affine form is the pointwise minimum among the
// active pieces. Throws empty_feasible_error when D is empty.
KFunctionCheck is_k_function(const PiecewiseLinearFn& f, const HPolyhedron& D,
                             const OrderingCone& K);

// The image pieces M_k = f(D intersect P_k) in generator form; empty pieces
// stay as empty entries.
std::vector<VPolyhedron> image_pieces(const Problem& problem);

class consolidation_failed_error : public std::logic_error {
public:
    consolidation_failed_error()
        : std::logic_error("image union not convex despite a positive K-function check") {}
};

struct ImagePlusCone {
    std::vector<VPolyhedron> image;        // the M_k
    std::vector<VPolyhedron> generators;   // the M_k + K
    std::vector<HPolyhedron> pieces;       // same sets in half-space form
    std::optional<HPolyhedron> consolidated;  // single polyhedron when convex
};

// Sums each image piece with the cone; when the problem is convex the union
// is consolidated into one polyhedron (and must consolidate).
ImagePlusCone image_plus_cone(const Problem& problem,
                              std::optional<bool> known_convex = std::nullopt);

}  // namespace pwlvo

#endif
