#include "pwlvo/cone.hpp"

#include "pwlvo/simplex.hpp"

namespace pwlvo {

OrderingCone build_cone(std::size_t dim, std::vector<RatVec> rows) {
    if (rows.empty())
        throw cone_error(cone_error::Kind::WholeSpaceCone, "cone rows define the whole space");
    for (const RatVec& r : rows) {
        if (r.size() != dim) throw std::invalid_argument("build_cone: row dim mismatch");
        if (is_zero_vec(r)) throw cone_error(cone_error::Kind::ZeroRow, "zero cone row");
    }

    OrderingCone K;
    K.dim = dim;
    K.rows = std::move(rows);

    RatMat row_mat;
    for (const RatVec& r : K.rows) row_mat.push_back(r);
    K.lineality_space.ambient_dim = dim;
    K.lineality_space.basis = kernel(row_mat, dim);
    K.complement_space = complement(K.lineality_space);

    const std::size_t r = K.complement_space.dim();
    for (const RatVec& row : K.rows) {
        RatVec c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = dot(row, K.complement_space.basis[i]);
        if (is_zero_vec(c)) throw std::logic_error("build_cone: row vanishes on the complement");
        K.pointed_rows.push_back(std::move(c));
    }
    if (!kernel(K.pointed_rows, r).empty())
        throw std::logic_error("build_cone: pointed part has nonzero lineality");

    // projection onto Y1 along Y0: the last r rows of the inverse of
    // [Y0 basis | Y1 basis] read off the Y1 coordinates.
    RatMat columns(dim, RatVec(dim));
    const std::size_t l = K.lineality_space.dim();
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < dim; ++i) columns[i][j] = K.lineality_space.basis[j][i];
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < dim; ++i) columns[i][l + j] = K.complement_space.basis[j][i];
    const RatMat inv = invert(columns);
    K.projection.assign(inv.begin() + static_cast<std::ptrdiff_t>(l), inv.end());
    return K;
}

bool OrderingCone::is_lineal() const {
    // K = Y0 exactly when K1 = {0}: no c != 0 satisfies pointed_rows . c <= 0
    ConstraintList rows_le;
    const std::size_t r = quotient_dim();
    for (const RatVec& row : pointed_rows) rows_le.push_back({row, Rat(0), Rel::LE});
    // K1 != {0} iff some coordinate direction admits a nonzero solution; test
    // by maximizing each +-coordinate over K1 capped at 1.
    for (std::size_t i = 0; i < r; ++i) {
        for (int sgn : {1, -1}) {
            RatVec obj = zero_vec(r);
            obj[i] = sgn;
            ConstraintList capped = rows_le;
            capped.push_back({obj, Rat(1), Rel::LE});
            const LpResult lp = lp_optimize(obj, Sense::Max, capped);
            if (lp.status == LpStatus::Optimal && lp.value > 0) return false;
        }
    }
    return true;
}

bool in_cone(const OrderingCone& K, const RatVec& y) {
    for (const RatVec& row : K.rows)
        if (dot(row, y) > 0) return false;
    return true;
}

bool in_int(const OrderingCone& K, const RatVec& y) {
    for (const RatVec& row : K.rows)
        if (dot(row, y) >= 0) return false;
    return true;
}

bool in_k_minus_l(const OrderingCone& K, const RatVec& y) {
    bool strict = false;
    for (const RatVec& row : K.rows) {
        const Rat v = dot(row, y);
        if (v > 0) return false;
        if (v < 0) strict = true;
    }
    return strict;
}

Region k_minus_l_pieces(const OrderingCone& K) {
    Region out;
    out.dim = K.dim;
    for (std::size_t j = 0; j < K.rows.size(); ++j) {
        SemiClosedPolyhedron piece;
        piece.dim = K.dim;
        for (std::size_t i = 0; i < K.rows.size(); ++i)
            piece.push({K.rows[i], Rat(0), i == j ? Rel::LT : Rel::LE});
        out.pieces.push_back(std::move(piece));
    }
    return region_prune(std::move(out));
}

bool quotient_check(const OrderingCone& K, const RatVec& y) {
    const RatVec c = mat_vec(K.projection, y);
    if (is_zero_vec(c)) return false;
    for (const RatVec& row : K.pointed_rows)
        if (dot(row, c) > 0) return false;
    return true;
}

bool translation_invariance_check(const OrderingCone& K, const std::vector<RatVec>& w_samples,
                                  const std::vector<RatVec>& k_samples) {
    for (const RatVec& w : w_samples) {
        const bool frontier = in_k_minus_l(K, w);
        const bool interior = in_int(K, w);
        if (!frontier && !interior) continue;
        for (const RatVec& k : k_samples) {
            if (!in_cone(K, k)) continue;
            const RatVec s = add(w, k);
            if (frontier && !in_k_minus_l(K, s)) return false;
            if (interior && !in_int(K, s)) return false;
        }
    }
    return true;
}

HPolyhedron cone_halfspaces(const OrderingCone& K) {
    HPolyhedron h;
    h.dim = K.dim;
    for (const RatVec& row : K.rows) h.inequalities.push_back({row, Rat(0), Rel::LE});
    return h;
}

VPolyhedron cone_generators(const OrderingCone& K) { return to_generators(cone_halfspaces(K)); }

SemiClosedPolyhedron interior_system(const OrderingCone& K) {
    SemiClosedPolyhedron s;
    s.dim = K.dim;
    for (const RatVec& row : K.rows) s.push({row, Rat(0), Rel::LT});
    return s;
}

bool interior_nonempty(const OrderingCone& K) { return !sc_is_empty(interior_system(K)); }

}  // namespace pwlvo
