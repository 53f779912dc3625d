#include "pwlvo/pwl.hpp"

#include "pwlvo/semiclosed.hpp"
#include "pwlvo/simplex.hpp"

#include <stdexcept>

namespace pwlvo {

namespace {

void check_shapes(const PiecewiseLinearFn& f) {
    if (f.pieces.empty()) throw std::invalid_argument("piecewise function needs pieces");
    for (const Piece& p : f.pieces) {
        if (p.domain.dim != f.source_dim)
            throw std::invalid_argument("piece domain dim mismatch");
        if (p.map.size() != f.image_dim || p.offset.size() != f.image_dim)
            throw std::invalid_argument("piece map shape mismatch");
        for (const RatVec& row : p.map)
            if (row.size() != f.source_dim)
                throw std::invalid_argument("piece map shape mismatch");
    }
}

}  // namespace

CoverCheck validate_cover(const PiecewiseLinearFn& f) {
    check_shapes(f);
    Region cover;
    cover.dim = f.source_dim;
    for (const Piece& p : f.pieces)
        cover.pieces.push_back(SemiClosedPolyhedron::from_closed(p.domain));
    const CoverResult res =
        region_covers(cover, SemiClosedPolyhedron::whole(f.source_dim));
    CoverCheck out;
    out.ok = res.covered;
    out.gap_witness = res.witness;
    return out;
}

ConsistencyCheck validate_consistency(const PiecewiseLinearFn& f) {
    check_shapes(f);
    ConsistencyCheck out;
    for (std::size_t k = 0; k < f.pieces.size(); ++k) {
        for (std::size_t l = k + 1; l < f.pieces.size(); ++l) {
            const VPolyhedron overlap =
                to_generators(intersect(f.pieces[k].domain, f.pieces[l].domain));
            if (overlap.is_empty()) continue;

            const Piece& a = f.pieces[k];
            const Piece& b = f.pieces[l];
            auto value_gap = [&](const RatVec& x) {  // f_k(x) - f_l(x), affine part
                return sub(mat_vec(a.map, x), mat_vec(b.map, x));
            };
            const RatVec offset_gap = sub(b.offset, a.offset);

            RatVec bad;
            for (const RatVec& u : overlap.points)
                if (value_gap(u) != offset_gap) { bad = u; break; }
            if (bad.empty()) {
                for (const RatVec& v : overlap.rays)
                    if (!is_zero_vec(value_gap(v))) { bad = add(overlap.points[0], v); break; }
            }
            if (bad.empty()) {
                for (const RatVec& w : overlap.lineality.basis)
                    if (!is_zero_vec(value_gap(w))) { bad = add(overlap.points[0], w); break; }
            }
            if (!bad.empty()) {
                out.ok = false;
                out.piece_k = k;
                out.piece_l = l;
                out.witness = std::move(bad);
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

RatVec eval(const PiecewiseLinearFn& f, const RatVec& x) {
    for (const Piece& p : f.pieces)
        if (contains(p.domain, x)) return add(mat_vec(p.map, x), p.offset);
    throw std::logic_error("eval: point escapes the validated cover");
}

KFunctionCheck is_k_function(const PiecewiseLinearFn& f, const HPolyhedron& D,
                             const OrderingCone& K) {
    check_shapes(f);
    if (K.dim != f.image_dim) throw std::invalid_argument("cone dim mismatch");
    if (is_empty(D)) throw empty_feasible_error();

    const long ambient = dim_of(to_generators(D));

    // pieces that meet D in full dimension; lower-dimensional overlaps are
    // covered by these and impose no condition of their own
    std::vector<std::size_t> active;
    std::vector<ConstraintList> active_rows;
    for (std::size_t k = 0; k < f.pieces.size(); ++k) {
        const HPolyhedron cell = intersect(D, f.pieces[k].domain);
        const VPolyhedron gen = to_generators(cell);
        if (gen.is_empty()) continue;
        if (dim_of(gen) != ambient) continue;
        active.push_back(k);
        active_rows.push_back(cell.all_rows());
    }

    KFunctionCheck out;
    for (std::size_t j = 0; j < K.rows.size(); ++j) {
        const RatVec& yj = K.rows[j];
        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            const std::size_t k = active[ai];
            const RatVec hk = vec_mat(yj, f.pieces[k].map);
            const Rat ck = dot(yj, f.pieces[k].offset);
            for (std::size_t l : active) {
                if (l == k) continue;
                const RatVec hl = vec_mat(yj, f.pieces[l].map);
                const Rat cl = dot(yj, f.pieces[l].offset);
                const RatVec diff = sub(hl, hk);
                const Rat shift = cl - ck;

                const LpResult lp = lp_optimize(diff, Sense::Min, active_rows[ai]);
                bool violated = false;
                RatVec witness;
                if (lp.status == LpStatus::Optimal) {
                    if (lp.value + shift < 0) {
                        violated = true;
                        witness = lp.point;
                    }
                } else if (lp.status == LpStatus::Unbounded) {
                    violated = true;
                    ConstraintList deep = active_rows[ai];
                    deep.push_back({diff, -shift - 1, Rel::LE});
                    const StrictResult sr = strict_feasible(deep, f.source_dim);
                    if (!sr.feasible) throw std::logic_error("is_k_function: lost witness");
                    witness = sr.witness;
                }
                if (violated) {
                    out.yes = false;
                    out.row_j = j;
                    out.piece_k = k;
                    out.piece_l = l;
                    out.witness = std::move(witness);
                    return out;
                }
            }
        }
    }
    out.yes = true;
    return out;
}

std::vector<VPolyhedron> image_pieces(const Problem& problem) {
    check_shapes(problem.f);
    std::vector<VPolyhedron> out;
    for (const Piece& p : problem.f.pieces) {
        const VPolyhedron cell = to_generators(intersect(problem.feasible, p.domain));
        out.push_back(affine_image(cell, p.map, p.offset));
    }
    return out;
}

ImagePlusCone image_plus_cone(const Problem& problem, std::optional<bool> known_convex) {
    ImagePlusCone out;
    out.image = image_pieces(problem);
    const VPolyhedron cone_v = cone_generators(problem.cone);
    for (const VPolyhedron& m : out.image) {
        VPolyhedron sum = minkowski_sum(m, cone_v);
        out.pieces.push_back(to_halfspaces(sum));
        out.generators.push_back(std::move(sum));
    }
    bool any = false;
    for (const VPolyhedron& m : out.image) any = any || !m.is_empty();
    if (!any) {
        out.consolidated = HPolyhedron::empty(problem.f.image_dim);
        return out;
    }
    const bool convex =
        known_convex ? *known_convex
                     : is_k_function(problem.f, problem.feasible, problem.cone).yes;
    if (convex) {
        const ConsolidateResult joined = consolidate_union(out.pieces);
        if (!joined.convex) throw consolidation_failed_error();
        out.consolidated = joined.hull;
    }
    return out;
}

}  // namespace pwlvo
