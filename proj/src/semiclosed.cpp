#include "pwlvo/semiclosed.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwlvo/simplex.hpp"

namespace pwlvo {

namespace {

// Scales a row so the first nonzero coefficient is +/-1; comparable rows then
// compare equal componentwise.
LinConstraint canonical_row(LinConstraint row) {
    for (const Rat& x : row.coeffs) {
        if (x != 0) {
            const Rat d = abs(x);
            if (d != 1) {
                for (Rat& y : row.coeffs) y /= d;
                row.rhs /= d;
            }
            break;
        }
    }
    return row;
}

// True when `a` makes `b` redundant among rows of the same direction.
bool dominates(const LinConstraint& a, const LinConstraint& b) {
    if (a.coeffs != b.coeffs) return false;
    if (a.rhs < b.rhs) return true;
    if (a.rhs > b.rhs) return false;
    return a.rel == Rel::LT || b.rel == Rel::LE;
}

struct CleanupResult {
    bool empty = false;
    ConstraintList eq, le, lt;
};

// Constant-row resolution, scale normalization and duplicate merging; no LPs.
CleanupResult light_cleanup(const ConstraintList& rows) {
    CleanupResult out;
    std::vector<LinConstraint> ineqs;
    for (const LinConstraint& raw : rows) {
        LinConstraint row = canonical_row(raw);
        if (is_zero_vec(row.coeffs)) {
            const bool ok = row.rel == Rel::EQ   ? row.rhs == 0
                            : row.rel == Rel::LE ? row.rhs >= 0
                                                 : row.rhs > 0;
            if (!ok) {
                out.empty = true;
                return out;
            }
            continue;
        }
        if (row.rel == Rel::EQ) {
            // canonicalize equality sign on the first nonzero coefficient
            for (const Rat& x : row.coeffs) {
                if (x != 0) {
                    if (x < 0) {
                        for (Rat& y : row.coeffs) y = -y;
                        row.rhs = -row.rhs;
                    }
                    break;
                }
            }
            if (std::find(out.eq.begin(), out.eq.end(), row) == out.eq.end())
                out.eq.push_back(std::move(row));
        } else {
            bool subsumed = false;
            for (std::size_t i = 0; i < ineqs.size();) {
                if (dominates(ineqs[i], row)) { subsumed = true; break; }
                if (dominates(row, ineqs[i])) {
                    ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    ++i;
                }
            }
            if (!subsumed) ineqs.push_back(std::move(row));
        }
    }
    for (LinConstraint& row : ineqs)
        (row.rel == Rel::LE ? out.le : out.lt).push_back(std::move(row));
    return out;
}

SemiClosedPolyhedron apply_cleanup(std::size_t dim, const ConstraintList& rows) {
    CleanupResult c = light_cleanup(rows);
    if (c.empty) return SemiClosedPolyhedron::empty(dim);
    SemiClosedPolyhedron s;
    s.dim = dim;
    s.equalities = std::move(c.eq);
    s.closed = std::move(c.le);
    s.strict = std::move(c.lt);
    return s;
}

// Negations of the rows of `cut`: the complement of the cut is the union of
// these one-row sets.
ConstraintList negated_rows(const SemiClosedPolyhedron& cut) {
    ConstraintList out;
    auto negate_le = [](const LinConstraint& c) {  // not(a.x <= b) is -a.x < -b
        return LinConstraint{scale(c.coeffs, Rat(-1)), Rat(-c.rhs), Rel::LT};
    };
    auto negate_lt = [](const LinConstraint& c) {  // not(a.x < b) is -a.x <= -b
        return LinConstraint{scale(c.coeffs, Rat(-1)), Rat(-c.rhs), Rel::LE};
    };
    for (const LinConstraint& c : cut.equalities) {
        out.push_back(LinConstraint{c.coeffs, c.rhs, Rel::LT});
        out.push_back(LinConstraint{scale(c.coeffs, Rat(-1)), Rat(-c.rhs), Rel::LT});
    }
    for (const LinConstraint& c : cut.closed) out.push_back(negate_le(c));
    for (const LinConstraint& c : cut.strict) out.push_back(negate_lt(c));
    return out;
}

std::vector<LinConstraint> sorted_rows(const SemiClosedPolyhedron& s) {
    auto key = [](const LinConstraint& c) {
        std::string k = c.rel == Rel::EQ ? "e" : (c.rel == Rel::LE ? "l" : "s");
        for (const Rat& x : c.coeffs) k += "," + rat_to_string(x);
        k += ";" + rat_to_string(c.rhs);
        return k;
    };
    std::vector<LinConstraint> rows = s.all_rows();
    std::sort(rows.begin(), rows.end(),
              [&](const LinConstraint& a, const LinConstraint& b) { return key(a) < key(b); });
    return rows;
}

}  // namespace

ConstraintList SemiClosedPolyhedron::all_rows() const {
    ConstraintList rows = equalities;
    rows.insert(rows.end(), closed.begin(), closed.end());
    rows.insert(rows.end(), strict.begin(), strict.end());
    return rows;
}

SemiClosedPolyhedron SemiClosedPolyhedron::from_closed(const HPolyhedron& P) {
    SemiClosedPolyhedron s;
    s.dim = P.dim;
    s.equalities = P.equalities;
    s.closed = P.inequalities;
    return s;
}

SemiClosedPolyhedron SemiClosedPolyhedron::empty(std::size_t dim) {
    SemiClosedPolyhedron s;
    s.dim = dim;
    s.closed.push_back({zero_vec(dim), Rat(-1), Rel::LE});
    return s;
}

SemiClosedPolyhedron SemiClosedPolyhedron::whole(std::size_t dim) {
    SemiClosedPolyhedron s;
    s.dim = dim;
    return s;
}

HPolyhedron SemiClosedPolyhedron::closed_relaxation() const {
    HPolyhedron p;
    p.dim = dim;
    p.equalities = equalities;
    p.inequalities = closed;
    for (LinConstraint c : strict) {
        c.rel = Rel::LE;
        p.inequalities.push_back(std::move(c));
    }
    return p;
}

void SemiClosedPolyhedron::push(LinConstraint row) {
    switch (row.rel) {
        case Rel::EQ: equalities.push_back(std::move(row)); break;
        case Rel::LE: closed.push_back(std::move(row)); break;
        case Rel::LT: strict.push_back(std::move(row)); break;
    }
}

Region Region::single(SemiClosedPolyhedron piece) {
    Region r;
    r.dim = piece.dim;
    r.pieces.push_back(std::move(piece));
    return r;
}

bool sc_is_empty(const SemiClosedPolyhedron& S) {
    return !strict_feasible(S.all_rows(), S.dim).feasible;
}

bool sc_contains(const SemiClosedPolyhedron& S, const RatVec& x) {
    for (const LinConstraint& c : S.equalities)
        if (!c.satisfied_by(x)) return false;
    for (const LinConstraint& c : S.closed)
        if (!c.satisfied_by(x)) return false;
    for (const LinConstraint& c : S.strict)
        if (!c.satisfied_by(x)) return false;
    return true;
}

bool region_contains(const Region& R, const RatVec& x) {
    for (const SemiClosedPolyhedron& p : R.pieces)
        if (sc_contains(p, x)) return true;
    return false;
}

bool region_is_empty(const Region& R) {
    for (const SemiClosedPolyhedron& p : R.pieces)
        if (!sc_is_empty(p)) return false;
    return true;
}

SemiClosedPolyhedron sc_intersect(const SemiClosedPolyhedron& A, const SemiClosedPolyhedron& B) {
    if (A.dim != B.dim) throw std::invalid_argument("sc_intersect: dim mismatch");
    SemiClosedPolyhedron r = A;
    r.equalities.insert(r.equalities.end(), B.equalities.begin(), B.equalities.end());
    r.closed.insert(r.closed.end(), B.closed.begin(), B.closed.end());
    r.strict.insert(r.strict.end(), B.strict.begin(), B.strict.end());
    return r;
}

Region region_intersect(const Region& A, const Region& B) {
    if (A.dim != B.dim) throw std::invalid_argument("region_intersect: dim mismatch");
    Region out;
    out.dim = A.dim;
    for (const SemiClosedPolyhedron& a : A.pieces)
        for (const SemiClosedPolyhedron& b : B.pieces) out.pieces.push_back(sc_intersect(a, b));
    return region_prune_light(std::move(out));
}

namespace {

struct ReduceOutcome {
    SemiClosedPolyhedron piece;
    bool empty = false;
    RatVec witness;  // a point of the piece when nonempty
};

ReduceOutcome reduce_impl(const SemiClosedPolyhedron& S, bool minimize_rows);

}  // namespace

SemiClosedPolyhedron sc_reduce(const SemiClosedPolyhedron& S) {
    ReduceOutcome out = reduce_impl(S, true);
    return out.empty ? SemiClosedPolyhedron::empty(S.dim) : std::move(out.piece);
}

namespace {

ReduceOutcome reduce_impl(const SemiClosedPolyhedron& S, bool minimize_rows) {
    ReduceOutcome out;
    SemiClosedPolyhedron s = apply_cleanup(S.dim, S.all_rows());
    const StrictResult sr = strict_feasible(s.all_rows(), s.dim);
    if (!sr.feasible) {
        out.empty = true;
        return out;
    }
    out.witness = sr.witness;

    // opposite closed pairs are an equality in disguise
    for (std::size_t i = 0; i < s.closed.size(); ++i) {
        const LinConstraint opposite{scale(s.closed[i].coeffs, Rat(-1)), Rat(-s.closed[i].rhs),
                                     Rel::LE};
        for (std::size_t j = i + 1; j < s.closed.size(); ++j) {
            if (s.closed[j] == opposite) {
                LinConstraint eq = s.closed[i];
                eq.rel = Rel::EQ;
                s.equalities.push_back(std::move(eq));
                s.closed.erase(s.closed.begin() + static_cast<std::ptrdiff_t>(j));
                s.closed.erase(s.closed.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
                break;
            }
        }
    }
    // eliminate the equality pivots from the inequality rows
    if (!s.equalities.empty()) {
        RatMat eq(s.equalities.size(), RatVec(s.dim + 1));
        for (std::size_t i = 0; i < s.equalities.size(); ++i) {
            for (std::size_t j = 0; j < s.dim; ++j) eq[i][j] = s.equalities[i].coeffs[j];
            eq[i][s.dim] = s.equalities[i].rhs;
        }
        const std::vector<std::size_t> pivots = rref(eq);
        auto substitute = [&](LinConstraint& c) {
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                if (pivots[i] >= s.dim) continue;
                const Rat f = c.coeffs[pivots[i]];
                if (f == 0) continue;
                for (std::size_t j = 0; j < s.dim; ++j) c.coeffs[j] -= f * eq[i][j];
                c.rhs -= f * eq[i][s.dim];
            }
        };
        for (LinConstraint& c : s.closed) substitute(c);
        for (LinConstraint& c : s.strict) substitute(c);
        // the reduced echelon rows are the canonical equalities
        s.equalities.clear();
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] >= s.dim) continue;
            LinConstraint c;
            c.coeffs.assign(eq[i].begin(), eq[i].begin() + static_cast<std::ptrdiff_t>(s.dim));
            c.rhs = eq[i][s.dim];
            c.rel = Rel::EQ;
            s.equalities.push_back(std::move(c));
        }
    }
    s = apply_cleanup(s.dim, s.all_rows());

    if (minimize_rows) {
        // The closure of a nonempty semi-closed piece is its closed
        // relaxation: rebuild from the facet-minimal closure, reopening the
        // facets the piece never touches, and keep only the strict rows that
        // still cut into the result (they carve lower-dimensional faces).
        const ConstraintList original = s.all_rows();
        const HPolyhedron hmin = to_halfspaces(to_generators(s.closed_relaxation()));
        SemiClosedPolyhedron rebuilt;
        rebuilt.dim = s.dim;
        rebuilt.equalities = hmin.equalities;
        for (const LinConstraint& row : hmin.inequalities) {
            ConstraintList pinned = original;
            pinned.push_back({row.coeffs, row.rhs, Rel::EQ});
            const bool open = !strict_feasible(pinned, s.dim).feasible;
            rebuilt.push({row.coeffs, row.rhs, open ? Rel::LT : Rel::LE});
        }
        ConstraintList kept = s.strict;
        for (std::size_t i = 0; i < kept.size();) {
            ConstraintList probe = rebuilt.all_rows();
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) probe.push_back(kept[j]);
            probe.push_back({scale(kept[i].coeffs, Rat(-1)), Rat(-kept[i].rhs), Rel::LE});
            if (strict_feasible(probe, s.dim).feasible) {
                ++i;  // the row still excludes points, keep it
            } else {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (LinConstraint& c : kept) rebuilt.push(std::move(c));
        s = apply_cleanup(s.dim, rebuilt.all_rows());
    }
    out.piece = std::move(s);
    out.piece.dim = S.dim;
    return out;
}

}  // namespace

bool sc_subset(const SemiClosedPolyhedron& P, const SemiClosedPolyhedron& Q) {
    if (P.dim != Q.dim) throw std::invalid_argument("sc_subset: dim mismatch");
    const ConstraintList base = P.all_rows();
    for (const LinConstraint& neg : negated_rows(Q)) {
        ConstraintList rows = base;
        rows.push_back(neg);
        if (strict_feasible(rows, P.dim).feasible) return false;
    }
    return true;
}

namespace {

std::vector<std::size_t> prune_indices_impl(Region& R, bool minimize_rows) {
    std::vector<std::size_t> kept;
    std::vector<SemiClosedPolyhedron> pieces;
    std::vector<RatVec> witnesses;
    std::vector<std::vector<LinConstraint>> seen;
    for (std::size_t i = 0; i < R.pieces.size(); ++i) {
        ReduceOutcome r = reduce_impl(R.pieces[i], minimize_rows);
        if (r.empty) continue;
        std::vector<LinConstraint> key = sorted_rows(r.piece);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        pieces.push_back(std::move(r.piece));
        witnesses.push_back(std::move(r.witness));
        kept.push_back(i);
    }
    // absorb pieces contained in another piece; earlier pieces win ties. A
    // piece whose witness escapes the candidate cannot be contained, which
    // settles most pairs without any LP.
    std::vector<bool> dead(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (!sc_contains(pieces[i], witnesses[j])) continue;
            if (sc_subset(pieces[j], pieces[i])) dead[j] = true;
        }
    }
    Region out;
    out.dim = R.dim;
    std::vector<std::size_t> surviving;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (dead[i]) continue;
        out.pieces.push_back(std::move(pieces[i]));
        surviving.push_back(kept[i]);
    }
    R = std::move(out);
    return surviving;
}

}  // namespace

std::vector<std::size_t> region_prune_indices(Region& R) {
    return prune_indices_impl(R, true);
}

Region region_prune(Region R) {
    prune_indices_impl(R, true);
    return R;
}

Region region_prune_light(Region R) {
    prune_indices_impl(R, false);
    return R;
}

Region difference(const SemiClosedPolyhedron& P, const SemiClosedPolyhedron& cut) {
    if (P.dim != cut.dim) throw std::invalid_argument("difference: dim mismatch");
    Region out;
    out.dim = P.dim;
    for (const LinConstraint& neg : negated_rows(cut)) {
        SemiClosedPolyhedron piece = P;
        piece.push(neg);
        piece = apply_cleanup(piece.dim, piece.all_rows());
        if (!sc_is_empty(piece)) out.pieces.push_back(std::move(piece));
    }
    return out;
}

Region region_difference(const Region& R, const Region& cuts) {
    if (!cuts.pieces.empty() && R.dim != cuts.dim)
        throw std::invalid_argument("region_difference: dim mismatch");
    std::vector<SemiClosedPolyhedron> current;
    for (const SemiClosedPolyhedron& p : R.pieces)
        if (!sc_is_empty(p)) current.push_back(p);
    for (const SemiClosedPolyhedron& cut : cuts.pieces) {
        if (current.empty()) break;
        std::vector<SemiClosedPolyhedron> next;
        for (const SemiClosedPolyhedron& p : current) {
            Region d = difference(p, cut);
            for (SemiClosedPolyhedron& piece : d.pieces) next.push_back(std::move(piece));
        }
        current = std::move(next);
    }
    Region out;
    out.dim = R.dim;
    out.pieces = std::move(current);
    return region_prune(std::move(out));
}

namespace {

bool covers_dfs(const Region& cover, std::size_t idx, const SemiClosedPolyhedron& S,
                RatVec& witness) {
    const StrictResult sr = strict_feasible(S.all_rows(), S.dim);
    if (!sr.feasible) return true;
    // pieces disjoint from the current cell cannot help covering it
    while (idx < cover.pieces.size() &&
           !strict_feasible(sc_intersect(S, cover.pieces[idx]).all_rows(), S.dim).feasible)
        ++idx;
    if (idx == cover.pieces.size()) {
        witness = sr.witness;
        return false;
    }
    for (const LinConstraint& neg : negated_rows(cover.pieces[idx])) {
        SemiClosedPolyhedron piece = S;
        piece.push(neg);
        if (!covers_dfs(cover, idx + 1, piece, witness)) return false;
    }
    return true;
}

}  // namespace

CoverResult region_covers(const Region& cover, const SemiClosedPolyhedron& P) {
    if (!cover.pieces.empty() && cover.dim != P.dim)
        throw std::invalid_argument("region_covers: dim mismatch");
    CoverResult res;
    res.covered = covers_dfs(cover, 0, P, res.witness);
    return res;
}

bool region_equal(const Region& A, const Region& B) {
    for (const SemiClosedPolyhedron& p : A.pieces)
        if (!region_covers(B, p).covered) return false;
    for (const SemiClosedPolyhedron& p : B.pieces)
        if (!region_covers(A, p).covered) return false;
    return true;
}

SemiClosedPolyhedron fm_project(const SemiClosedPolyhedron& S, const std::vector<std::size_t>& drop) {
    const std::size_t d = S.dim;
    for (std::size_t j : drop)
        if (j >= d) throw std::invalid_argument("fm_project: index out of range");

    ConstraintList rows = S.all_rows();
    for (std::size_t j : drop) {
        // an equality row with a nonzero pivot substitutes the variable away
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rel == Rel::EQ && rows[i].coeffs[j] != 0) { pivot = i; break; }
        }
        ConstraintList next;
        if (pivot != rows.size()) {
            const LinConstraint p = rows[pivot];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == pivot) continue;
                LinConstraint r = rows[i];
                if (r.coeffs[j] != 0) {
                    const Rat f = r.coeffs[j] / p.coeffs[j];
                    r.coeffs = sub(r.coeffs, scale(p.coeffs, f));
                    r.rhs -= f * p.rhs;
                }
                next.push_back(std::move(r));
            }
        } else {
            // combine each lower bound with each upper bound; strictness of a
            // derived row is inherited from either parent
            std::vector<const LinConstraint*> lower, upper;
            for (const LinConstraint& r : rows) {
                if (r.coeffs[j] == 0) {
                    next.push_back(r);
                } else if (r.coeffs[j] > 0) {
                    upper.push_back(&r);
                } else {
                    lower.push_back(&r);
                }
            }
            for (const LinConstraint* lo : lower) {
                for (const LinConstraint* up : upper) {
                    const Rat a = up->coeffs[j];   // > 0
                    const Rat b = -lo->coeffs[j];  // > 0
                    LinConstraint r;
                    r.coeffs = add(scale(lo->coeffs, a), scale(up->coeffs, b));
                    r.rhs = a * lo->rhs + b * up->rhs;
                    r.rel = (lo->rel == Rel::LT || up->rel == Rel::LT) ? Rel::LT : Rel::LE;
                    next.push_back(std::move(r));
                }
            }
        }
        const CleanupResult c = light_cleanup(next);
        if (c.empty) {
            rows = SemiClosedPolyhedron::empty(d).all_rows();
            break;
        }
        rows = c.eq;
        rows.insert(rows.end(), c.le.begin(), c.le.end());
        rows.insert(rows.end(), c.lt.begin(), c.lt.end());
    }

    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < d; ++j)
        if (std::find(drop.begin(), drop.end(), j) == drop.end()) keep.push_back(j);

    SemiClosedPolyhedron out;
    out.dim = keep.size();
    for (const LinConstraint& r : rows) {
        LinConstraint c;
        c.rel = r.rel;
        c.rhs = r.rhs;
        for (std::size_t j : keep) c.coeffs.push_back(r.coeffs[j]);
        out.push(std::move(c));
    }
    return apply_cleanup(out.dim, out.all_rows());
}

SemiClosedPolyhedron sc_affine_image(const SemiClosedPolyhedron& S, const RatMat& map,
                                     const RatVec& offset) {
    const std::size_t n = S.dim;
    const std::size_t m = map.size();
    for (const RatVec& row : map)
        if (row.size() != n) throw std::invalid_argument("sc_affine_image: shape mismatch");

    // graph system over (x, y) with y = map x + offset, then drop x
    SemiClosedPolyhedron graph;
    graph.dim = n + m;
    for (const LinConstraint& c : S.all_rows()) {
        LinConstraint r;
        r.coeffs = c.coeffs;
        r.coeffs.resize(n + m, Rat(0));
        r.rhs = c.rhs;
        r.rel = c.rel;
        graph.push(std::move(r));
    }
    for (std::size_t i = 0; i < m; ++i) {
        LinConstraint r;
        r.coeffs = scale(map[i], Rat(-1));
        r.coeffs.resize(n + m, Rat(0));
        r.coeffs[n + i] = 1;
        r.rhs = offset[i];
        r.rel = Rel::EQ;
        graph.push(std::move(r));
    }
    std::vector<std::size_t> drop(n);
    for (std::size_t j = 0; j < n; ++j) drop[j] = j;
    return fm_project(graph, drop);
}

SemiClosedPolyhedron sc_sum(const VPolyhedron& P, const SemiClosedPolyhedron& C) {
    if (P.dim != C.dim) throw std::invalid_argument("sc_sum: dim mismatch");
    const std::size_t d = P.dim;
    if (P.is_empty() || sc_is_empty(C)) return SemiClosedPolyhedron::empty(d);

    // (p, y) with p in P and y - p in C, projected onto y
    const HPolyhedron ph = to_halfspaces(P);
    SemiClosedPolyhedron sys;
    sys.dim = 2 * d;
    for (const LinConstraint& c : ph.all_rows()) {
        LinConstraint r;
        r.coeffs = c.coeffs;
        r.coeffs.resize(2 * d, Rat(0));
        r.rhs = c.rhs;
        r.rel = c.rel;
        sys.push(std::move(r));
    }
    for (const LinConstraint& c : C.all_rows()) {
        LinConstraint r;
        r.coeffs = scale(c.coeffs, Rat(-1));
        r.coeffs.insert(r.coeffs.end(), c.coeffs.begin(), c.coeffs.end());
        r.rhs = c.rhs;
        r.rel = c.rel;
        sys.push(std::move(r));
    }
    std::vector<std::size_t> drop(d);
    for (std::size_t j = 0; j < d; ++j) drop[j] = j;
    return fm_project(sys, drop);
}

}  // namespace pwlvo
