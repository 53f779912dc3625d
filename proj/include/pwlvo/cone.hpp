#ifndef PWLVO_CONE_HPP
#define PWLVO_CONE_HPP

#include "pwlvo/linalg.hpp"
#include "pwlvo/polyhedron.hpp"
#include "pwlvo/rational.hpp"
#include "pwlvo/semiclosed.hpp"

#include <stdexcept>
#include <vector>

namespace pwlvo {

class cone_error : public std::invalid_argument {
public:
    enum class Kind { ZeroRow, WholeSpaceCone };
    cone_error(Kind kind, const std::string& what) : std::invalid_argument(what), kind(kind) {}
    Kind kind;
};

// Polyhedral ordering cone K = {y : row_j . y <= 0 for all j} with cached
// decomposition: lineality space Y0, complement Y1, the pointed part K1 in
// Y1 coordinates, and the projection onto Y1 along Y0.
struct OrderingCone {
    std::size_t dim = 0;
    std::vector<RatVec> rows;

    Subspace lineality_space;  // Y0, kernel of the rows
    Subspace complement_space; // Y1, first independent standard vectors
    RatMat pointed_rows;       // K1 = {c : pointed_rows . c <= 0} in Y1 coords
    RatMat projection;         // maps y to its Y1 coordinates along Y0

    std::size_t quotient_dim() const { return complement_space.dim(); }
    bool is_lineal() const;  // K equal to its lineality space
};

// Validates the rows (nonzero, at least one) and fills every cache.
OrderingCone build_cone(std::size_t dim, std::vector<RatVec> rows);

bool in_cone(const OrderingCone& K, const RatVec& y);

// Strict-row membership test; the set is empty when K has no interior.
bool in_int(const OrderingCone& K, const RatVec& y);

// y in K with at least one row strictly negative.
bool in_k_minus_l(const OrderingCone& K, const RatVec& y);

// One semi-closed cone per row j: {y in K : row_j . y < 0}; their union is
// exactly the set recognized by in_k_minus_l. Empty pieces are pruned.
Region k_minus_l_pieces(const OrderingCone& K);

// Projection route for the same membership: pi(y) in K1 minus the origin.
bool quotient_check(const OrderingCone& K, const RatVec& y);

// Checks w + k stays in K minus lineality (resp. in the interior) for every
// sampled w in that set and every sampled k in K.
bool translation_invariance_check(const OrderingCone& K, const std::vector<RatVec>& w_samples,
                                  const std::vector<RatVec>& k_samples);

HPolyhedron cone_halfspaces(const OrderingCone& K);
VPolyhedron cone_generators(const OrderingCone& K);

// All rows strict, as a semi-closed system (the interior of K).
SemiClosedPolyhedron interior_system(const OrderingCone& K);
bool interior_nonempty(const OrderingCone& K);

}  // namespace pwlvo

#endif
