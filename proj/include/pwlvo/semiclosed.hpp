#ifndef PWLVO_SEMICLOSED_HPP
#define PWLVO_SEMICLOSED_HPP

#include "pwlvo/constraint.hpp"
#include "pwlvo/polyhedron.hpp"
#include "pwlvo/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pwlvo {

// Mixed strict/non-strict linear system. A closed polyhedron is the special
// case with no strict rows.
struct SemiClosedPolyhedron {
    std::size_t dim = 0;
    ConstraintList equalities;  // Rel::EQ
    ConstraintList closed;      // Rel::LE
    ConstraintList strict;      // Rel::LT

    ConstraintList all_rows() const;
    bool has_strict() const { return !strict.empty(); }

    static SemiClosedPolyhedron from_closed(const HPolyhedron& P);
    static SemiClosedPolyhedron empty(std::size_t dim);
    static SemiClosedPolyhedron whole(std::size_t dim);

    // Rows with strict rows relaxed to closed ones. Equals the topological
    // closure whenever the set is nonempty.
    HPolyhedron closed_relaxation() const;

    void push(LinConstraint row);
};

// Finite union of semi-closed polyhedra.
struct Region {
    std::size_t dim = 0;
    std::vector<SemiClosedPolyhedron> pieces;

    static Region single(SemiClosedPolyhedron piece);
    static Region empty(std::size_t dim) { return Region{dim, {}}; }
};

bool sc_is_empty(const SemiClosedPolyhedron& S);
bool sc_contains(const SemiClosedPolyhedron& S, const RatVec& x);
bool region_contains(const Region& R, const RatVec& x);
bool region_is_empty(const Region& R);

SemiClosedPolyhedron sc_intersect(const SemiClosedPolyhedron& A, const SemiClosedPolyhedron& B);
Region region_intersect(const Region& A, const Region& B);

// Drops duplicate and LP-implied rows and folds opposite closed pairs into
// equalities; returns the canonical empty form for empty sets. Never changes
// the described point set.
SemiClosedPolyhedron sc_reduce(const SemiClosedPolyhedron& S);

// Exact subset test P subset-of Q between single pieces.
bool sc_subset(const SemiClosedPolyhedron& P, const SemiClosedPolyhedron& Q);

// Pruned pieces (nonempty, reduced, deduplicated, absorbed into one another
// where contained). Returns the surviving indices of the input list. The
// light variant skips the per-row LP minimization of the pieces; semantics
// are identical either way.
std::vector<std::size_t> region_prune_indices(Region& R);
Region region_prune(Region R);
Region region_prune_light(Region R);

// P minus cut as a finite union: one piece per negated row of the cut
// (equality rows negate into two strict pieces).
Region difference(const SemiClosedPolyhedron& P, const SemiClosedPolyhedron& cut);

// R minus the union of cuts (difference folded over all pieces).
Region region_difference(const Region& R, const Region& cuts);

struct CoverResult {
    bool covered = true;
    RatVec witness;  // a point of P outside the cover when not covered
};

// Decides P subset-of union(cover) without materializing the difference.
CoverResult region_covers(const Region& cover, const SemiClosedPolyhedron& P);

// Both directions of region_covers: exact set equality of two unions.
bool region_equal(const Region& A, const Region& B);

// Fourier-Motzkin elimination of the listed coordinates; a derived row is
// strict iff either parent row is strict. Remaining coordinates keep their
// relative order.
SemiClosedPolyhedron fm_project(const SemiClosedPolyhedron& S, const std::vector<std::size_t>& drop);

// Image {Tx + b : x in S}, via projection of the graph system.
SemiClosedPolyhedron sc_affine_image(const SemiClosedPolyhedron& S, const RatMat& map, const RatVec& offset);

// Minkowski sum {p + c : p in P, c in C} of a closed polyhedron in generator
// form with a semi-closed one.
SemiClosedPolyhedron sc_sum(const VPolyhedron& P, const SemiClosedPolyhedron& C);

}  // namespace pwlvo

#endif
