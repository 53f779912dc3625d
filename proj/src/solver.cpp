#include "pwlvo/solver.hpp"

#include <algorithm>
#include <numeric>

#include "pwlvo/simplex.hpp"

namespace pwlvo {

namespace {

struct SumCache {
    std::vector<VPolyhedron> image;   // M_k, possibly empty entries
    std::vector<VPolyhedron> sums;    // M_k + K
    std::vector<HPolyhedron> sums_h;  // half-space forms of the nonempty sums
    std::vector<std::size_t> live;    // indices with nonempty image
};

SumCache build_sums(const std::vector<VPolyhedron>& Ms, const OrderingCone& K) {
    SumCache c;
    c.image = Ms;
    const VPolyhedron cone_v = cone_generators(K);
    for (std::size_t k = 0; k < Ms.size(); ++k) {
        VPolyhedron sum = minkowski_sum(Ms[k], cone_v);
        c.sums_h.push_back(to_halfspaces(sum));
        c.sums.push_back(std::move(sum));
        if (!Ms[k].is_empty()) c.live.push_back(k);
    }
    return c;
}

Region q_region(const SumCache& cache, std::size_t dim) {
    Region q;
    q.dim = dim;
    for (std::size_t k : cache.live)
        q.pieces.push_back(SemiClosedPolyhedron::from_closed(cache.sums_h[k]));
    return q;
}

FrontierDecomposition efficient_frontier_cached(const SumCache& cache, const OrderingCone& K) {
    if (cache.live.empty()) throw all_empty_error();
    const Region q = q_region(cache, K.dim);

    // dominated points: union over k, j of M_k + C_j, using that adding K to
    // a strict cone piece changes nothing
    Region cuts;
    cuts.dim = K.dim;
    for (const SemiClosedPolyhedron& cj : k_minus_l_pieces(K).pieces)
        for (std::size_t k : cache.live) cuts.pieces.push_back(sc_sum(cache.image[k], cj));
    cuts = region_prune(std::move(cuts));

    FrontierDecomposition out;
    out.kind = FrontierKind::Efficient;
    out.image_pieces = region_difference(q, cuts);
    return out;
}

FrontierDecomposition weak_frontier_paper_cached(const SumCache& cache, const OrderingCone& K) {
    if (!interior_nonempty(K)) throw empty_interior_error();
    if (cache.live.empty()) throw all_empty_error();
    const Region q = q_region(cache, K.dim);

    Region acc;
    bool first = true;
    for (std::size_t k : cache.live) {
        // rows of M_k + K, equalities expanded into paired inequalities
        ConstraintList rows = cache.sums_h[k].inequalities;
        for (const LinConstraint& e : cache.sums_h[k].equalities) {
            rows.push_back({e.coeffs, e.rhs, Rel::LE});
            rows.push_back({scale(e.coeffs, Rat(-1)), Rat(-e.rhs), Rel::LE});
        }

        bool whole_q = false;
        std::vector<LinConstraint> complements;  // rows a.y >= b cutting Q
        for (const LinConstraint& row : rows) {
            const HalfspaceSumResult sum = halfspace_plus_interior(row, K);
            if (sum.kind == HalfspaceSumKind::Empty) { whole_q = true; break; }
            if (sum.kind == HalfspaceSumKind::WholeSpace) continue;
            LinConstraint cut;
            cut.coeffs = scale(sum.open.coeffs, Rat(-1));
            cut.rhs = -sum.open.rhs;
            cut.rel = Rel::LE;
            // same-direction cuts merge into the weaker bound
            bool kept = true;
            for (LinConstraint& seen : complements) {
                if (seen.coeffs == cut.coeffs) {
                    seen.rhs = std::max(seen.rhs, cut.rhs);
                    kept = false;
                    break;
                }
            }
            if (kept) complements.push_back(std::move(cut));
        }

        Region factor;
        factor.dim = K.dim;
        if (whole_q) {
            factor = q;
        } else {
            for (const LinConstraint& cut : complements) {
                for (std::size_t k1 : cache.live) {
                    SemiClosedPolyhedron piece =
                        SemiClosedPolyhedron::from_closed(cache.sums_h[k1]);
                    piece.push(cut);
                    factor.pieces.push_back(std::move(piece));
                }
            }
            factor = region_prune_light(std::move(factor));
        }
        acc = first ? std::move(factor) : region_intersect(acc, factor);
        first = false;
        if (acc.pieces.empty()) break;
    }

    FrontierDecomposition out;
    out.kind = FrontierKind::WeaklyEfficient;
    out.image_pieces = region_prune(std::move(acc));
    for (const SemiClosedPolyhedron& p : out.image_pieces.pieces)
        if (p.has_strict()) throw std::logic_error("weak frontier produced a strict row");
    return out;
}

Region weak_frontier_generic_cached(const SumCache& cache, const OrderingCone& K) {
    if (!interior_nonempty(K)) throw empty_interior_error();
    if (cache.live.empty()) throw all_empty_error();
    const Region q = q_region(cache, K.dim);

    Region cuts;
    cuts.dim = K.dim;
    const SemiClosedPolyhedron inner = interior_system(K);
    for (std::size_t k : cache.live) cuts.pieces.push_back(sc_sum(cache.image[k], inner));
    cuts = region_prune(std::move(cuts));
    return region_difference(q, cuts);
}

// closure of every piece; valid when the union is known to be closed
Region close_pieces(const Region& R) {
    Region out;
    out.dim = R.dim;
    for (const SemiClosedPolyhedron& p : R.pieces)
        out.pieces.push_back(SemiClosedPolyhedron::from_closed(p.closed_relaxation()));
    return region_prune(std::move(out));
}

ConnectivityCertificate components_of(const Region& R, bool certified) {
    const std::size_t n = R.pieces.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (!sc_is_empty(sc_intersect(R.pieces[i], R.pieces[j]))) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    ConnectivityCertificate cert;
    cert.certified = certified;
    for (auto& g : groups)
        if (!g.empty()) cert.components.push_back(std::move(g));
    cert.connected = cert.components.size() <= 1;
    return cert;
}

}  // namespace

FrontierDecomposition efficient_frontier(const std::vector<VPolyhedron>& Ms,
                                         const OrderingCone& K) {
    return efficient_frontier_cached(build_sums(Ms, K), K);
}

FrontierDecomposition weak_frontier_paper(const std::vector<VPolyhedron>& Ms,
                                          const OrderingCone& K) {
    return weak_frontier_paper_cached(build_sums(Ms, K), K);
}

Region weak_frontier_generic(const std::vector<VPolyhedron>& Ms, const OrderingCone& K) {
    return weak_frontier_generic_cached(build_sums(Ms, K), K);
}

HalfspaceSumResult halfspace_plus_open(const LinConstraint& H, const RatVec& cone_row) {
    if (is_zero_vec(cone_row)) throw std::invalid_argument("halfspace_plus_open: zero cone row");
    HalfspaceSumResult out;
    if (is_zero_vec(H.coeffs)) {
        out.kind = H.rhs < 0 ? HalfspaceSumKind::Empty : HalfspaceSumKind::WholeSpace;
        return out;
    }
    // kernels agree iff cone_row is a multiple of the row normal
    std::size_t i0 = 0;
    while (H.coeffs[i0] == 0) ++i0;
    const Rat lambda = cone_row[i0] / H.coeffs[i0];
    if (lambda != 0 && cone_row == scale(H.coeffs, lambda)) {
        if (lambda > 0) {
            out.kind = HalfspaceSumKind::OpenHalfspace;
            out.open = {H.coeffs, H.rhs, Rel::LT};
            return out;
        }
    }
    out.kind = HalfspaceSumKind::WholeSpace;
    return out;
}

HalfspaceSumResult halfspace_plus_interior(const LinConstraint& H, const OrderingCone& K) {
    HalfspaceSumResult out;
    if (is_zero_vec(H.coeffs)) {
        out.kind = H.rhs < 0 ? HalfspaceSumKind::Empty : HalfspaceSumKind::WholeSpace;
        return out;
    }
    for (const RatVec& row : K.rows) {
        const HalfspaceSumResult per_row = halfspace_plus_open(H, row);
        if (per_row.kind == HalfspaceSumKind::OpenHalfspace) return per_row;
    }
    // the row normal recedes along K iff its maximum over K is zero
    const LpResult lp =
        lp_optimize(H.coeffs, Sense::Max, cone_halfspaces(K).all_rows());
    if (lp.status == LpStatus::Optimal && lp.value <= 0) {
        out.kind = HalfspaceSumKind::OpenHalfspace;
        out.open = {H.coeffs, H.rhs, Rel::LT};
        return out;
    }
    out.kind = HalfspaceSumKind::WholeSpace;
    return out;
}

Pullback pull_back(const FrontierDecomposition& frontier, const Problem& problem) {
    const std::size_t n = problem.f.source_dim;
    if (frontier.image_pieces.dim != problem.f.image_dim)
        throw std::invalid_argument("pull_back: frontier lives in the wrong space");

    Pullback out;
    out.region.dim = n;
    std::vector<PullbackProvenance> provenance;
    for (std::size_t k = 0; k < problem.f.pieces.size(); ++k) {
        const Piece& piece = problem.f.pieces[k];
        for (std::size_t j = 0; j < frontier.image_pieces.pieces.size(); ++j) {
            const SemiClosedPolyhedron& fj = frontier.image_pieces.pieces[j];
            SemiClosedPolyhedron cell;
            cell.dim = n;
            for (const LinConstraint& c : problem.feasible.all_rows()) cell.push(c);
            for (const LinConstraint& c : piece.domain.all_rows()) cell.push(c);
            for (const LinConstraint& c : fj.all_rows()) {
                LinConstraint r;
                r.coeffs = vec_mat(c.coeffs, piece.map);
                r.rhs = c.rhs - dot(c.coeffs, piece.offset);
                r.rel = c.rel;
                cell.push(std::move(r));
            }
            out.region.pieces.push_back(std::move(cell));
            provenance.push_back({k, j});
        }
    }
    for (std::size_t idx : region_prune_indices(out.region))
        out.provenance.push_back(provenance[idx]);
    return out;
}

Problem quotient_reduce(const Problem& problem) {
    const OrderingCone& K = problem.cone;
    Problem reduced;
    reduced.feasible = problem.feasible;
    reduced.f.source_dim = problem.f.source_dim;
    reduced.f.image_dim = K.quotient_dim();
    for (const Piece& p : problem.f.pieces) {
        Piece q;
        q.domain = p.domain;
        q.map = mat_mul(K.projection, p.map);
        q.offset = mat_vec(K.projection, p.offset);
        reduced.f.pieces.push_back(std::move(q));
    }
    reduced.cone = build_cone(K.quotient_dim(), K.pointed_rows);
    return reduced;
}

ConnectivityCertificate connectivity_certificate(const Region& R) {
    for (const SemiClosedPolyhedron& p : R.pieces)
        if (p.has_strict()) throw strict_rows_error();
    return components_of(R, true);
}

ConnectivityCertificate connectivity_descriptive(const Region& R) {
    Region closed;
    closed.dim = R.dim;
    for (const SemiClosedPolyhedron& p : R.pieces)
        closed.pieces.push_back(SemiClosedPolyhedron::from_closed(p.closed_relaxation()));
    return components_of(closed, false);
}

SolveReport solve(const Problem& problem, WeakMethod method) {
    const std::uint64_t lp_before = lp_solve_count();

    const CoverCheck cover = validate_cover(problem.f);
    if (!cover.ok) throw std::invalid_argument("piece domains do not cover the source space");
    const ConsistencyCheck consistency = validate_consistency(problem.f);
    if (!consistency.ok) throw std::invalid_argument("piece maps disagree on an overlap");

    SolveReport report;
    report.sol.dim = problem.f.source_dim;

    if (is_empty(problem.feasible)) {
        report.convex = true;  // vacuously
        report.sol = Region::empty(problem.f.source_dim);
        report.wsol = Region::empty(problem.f.source_dim);
        report.sol_closed = true;
        report.sol_connectivity = connectivity_certificate(report.sol);
        report.wsol_connectivity = connectivity_certificate(*report.wsol);
        report.stats.lp_count = lp_solve_count() - lp_before;
        return report;
    }

    report.convex = is_k_function(problem.f, problem.feasible, problem.cone).yes;

    const SumCache cache = build_sums(image_pieces(problem), problem.cone);
    report.stats.image_piece_count = cache.live.size();
    if (report.convex) {
        // the consolidated image-plus-cone set must exist in the convex case
        const ConsolidateResult joined = consolidate_union(cache.sums_h);
        if (!joined.convex) throw consolidation_failed_error();
    }

    const FrontierDecomposition eff = efficient_frontier_cached(cache, problem.cone);
    Pullback sol = pull_back(eff, problem);
    if (report.convex) {
        // closed decomposition exists; closing the pieces must not change the set
        Region closed = close_pieces(sol.region);
        if (!region_equal(closed, sol.region))
            throw std::logic_error("convex case produced a non-closed solution set");
        sol.region = std::move(closed);
        sol.provenance.clear();  // piece alignment does not survive the closure
    }
    report.sol = sol.region;
    report.sol_provenance = sol.provenance;
    report.sol_closed = true;
    for (const SemiClosedPolyhedron& p : report.sol.pieces)
        if (p.has_strict()) report.sol_closed = false;
    report.sol_connectivity = report.sol_closed ? connectivity_certificate(report.sol)
                                                : connectivity_descriptive(report.sol);
    report.stats.sol_piece_count = report.sol.pieces.size();

    if (interior_nonempty(problem.cone)) {
        FrontierDecomposition weak;
        weak.kind = FrontierKind::WeaklyEfficient;
        switch (method) {
            case WeakMethod::Paper:
                weak = weak_frontier_paper_cached(cache, problem.cone);
                break;
            case WeakMethod::Generic:
                weak.image_pieces = weak_frontier_generic_cached(cache, problem.cone);
                break;
            case WeakMethod::Both: {
                weak = weak_frontier_paper_cached(cache, problem.cone);
                const Region generic = weak_frontier_generic_cached(cache, problem.cone);
                if (!decomposition_equal(weak.image_pieces, generic))
                    throw method_disagreement_error();
                break;
            }
        }
        Pullback wsol = pull_back(weak, problem);
        {
            // the weak solution set is a union of closed sets whenever it is
            // defined; normalize any strict rows away
            bool strict = false;
            for (const SemiClosedPolyhedron& p : wsol.region.pieces) strict |= p.has_strict();
            if (strict) {
                Region closed = close_pieces(wsol.region);
                if (!region_equal(closed, wsol.region))
                    throw std::logic_error("weak solution set failed to close up");
                wsol.region = std::move(closed);
                wsol.provenance.clear();
            }
        }
        report.wsol = wsol.region;
        report.wsol_provenance = wsol.provenance;
        report.wsol_connectivity = connectivity_certificate(*report.wsol);
        report.stats.wsol_piece_count = report.wsol->pieces.size();
    } else {
        report.wsol_omitted_reason = "interior of the ordering cone is empty";
    }

    report.stats.lp_count = lp_solve_count() - lp_before;
    return report;
}

bool decomposition_equal(const Region& A, const Region& B) { return region_equal(A, B); }

}  // namespace pwlvo
