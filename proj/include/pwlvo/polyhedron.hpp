#ifndef PWLVO_POLYHEDRON_HPP
#define PWLVO_POLYHEDRON_HPP

#include "pwlvo/constraint.hpp"
#include "pwlvo/linalg.hpp"
#include "pwlvo/rational.hpp"

#include <cstddef>
#include <vector>

namespace pwlvo {

// Closed polyhedron in half-space form: {x : eq rows hold with =, le rows with <=}.
struct HPolyhedron {
    std::size_t dim = 0;
    ConstraintList equalities;
    ConstraintList inequalities;

    ConstraintList all_rows() const {
        ConstraintList rows = equalities;
        rows.insert(rows.end(), inequalities.begin(), inequalities.end());
        return rows;
    }

    // Canonical empty form: the single row 0.x <= -1.
    static HPolyhedron empty(std::size_t dim) {
        HPolyhedron p;
        p.dim = dim;
        p.inequalities.push_back({zero_vec(dim), Rat(-1), Rel::LE});
        return p;
    }

    static HPolyhedron whole(std::size_t dim) {
        HPolyhedron p;
        p.dim = dim;
        return p;
    }
};

// Generator (Minkowski-Weyl) form: conv(points) + cone(rays) + span(lineality).
// An empty point list means the empty set.
struct VPolyhedron {
    std::size_t dim = 0;
    std::vector<RatVec> points;
    std::vector<RatVec> rays;
    Subspace lineality;

    bool is_empty() const { return points.empty(); }

    static VPolyhedron empty(std::size_t dim) {
        VPolyhedron v;
        v.dim = dim;
        v.lineality.ambient_dim = dim;
        return v;
    }
};

// Extreme rays and lineality of the cone {x : row . x <= 0 for all rows},
// by the incremental double description method with the algebraic rank
// adjacency test. The returned rays are extreme and pairwise non-parallel.
struct DDCone {
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
};
DDCone dd_cone(const std::vector<RatVec>& rows, std::size_t dim);

VPolyhedron to_generators(const HPolyhedron& P);
HPolyhedron to_halfspaces(const VPolyhedron& V);

VPolyhedron minkowski_sum(const VPolyhedron& P, const VPolyhedron& Q);
VPolyhedron affine_image(const VPolyhedron& P, const RatMat& map, const RatVec& offset);
HPolyhedron affine_preimage(const HPolyhedron& P, const RatMat& map, const RatVec& offset);

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q);
bool is_empty(const HPolyhedron& P);
bool contains(const HPolyhedron& P, const RatVec& x);
bool contains(const VPolyhedron& V, const RatVec& x);

// Decides P subset-of Q exactly (each row of Q optimized over P).
bool inclusion_check(const HPolyhedron& P, const HPolyhedron& Q);

// Optional cleanup pass: drops inequality rows implied by the rest.
HPolyhedron normalize(const HPolyhedron& P);

struct ConsolidateResult {
    bool convex = false;
    HPolyhedron hull;  // equals the union when convex
};

// If the union of the parts is convex, returns it as a single polyhedron
// (convex hull of all generators, certified against the union); otherwise
// reports NotConvex via convex = false.
ConsolidateResult consolidate_union(const std::vector<HPolyhedron>& parts);

// Affine dimension; -1 for the empty set.
long dim_of(const VPolyhedron& V);
long dim_of(const HPolyhedron& P);

// A relative interior point of a nonempty polyhedron in generator form.
RatVec relint_point(const VPolyhedron& V);

}  // namespace pwlvo

#endif
