#include "pwlvo/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwlvo/semiclosed.hpp"
#include "pwlvo/simplex.hpp"

namespace pwlvo {

namespace {

bool contains_direction(const std::vector<RatVec>& dirs, const RatVec& d) {
    return std::find(dirs.begin(), dirs.end(), d) != dirs.end();
}

}  // namespace

DDCone dd_cone(const std::vector<RatVec>& rows, std::size_t dim) {
    std::vector<RatVec> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVec e = zero_vec(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<RatVec> rays;
    std::vector<RatVec> processed;

    // Two rays are adjacent iff the rows tight at both have rank
    // dim - lineality - 2; then their combination is an extreme ray.
    auto adjacent = [&](const RatVec& r1, const RatVec& r2) {
        RatMat tight;
        for (const RatVec& p : processed)
            if (dot(p, r1) == 0 && dot(p, r2) == 0) tight.push_back(p);
        return rank(std::move(tight)) + lin.size() + 2 == dim;
    };

    for (const RatVec& a : rows) {
        if (a.size() != dim) throw std::invalid_argument("dd_cone: row dim mismatch");
        if (is_zero_vec(a)) continue;

        std::size_t wi = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i) {
            if (dot(a, lin[i]) != 0) { wi = i; break; }
        }
        if (wi != lin.size()) {
            // The constraint cuts the lineality space: one direction of it
            // survives as a ray, the rest is projected onto the hyperplane.
            const RatVec w = lin[wi];
            const Rat aw = dot(a, w);
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(wi));
            for (RatVec& v : lin) {
                const Rat av = dot(a, v);
                if (av != 0) v = sub(v, scale(w, av / aw));
            }
            for (RatVec& r : rays) {
                const Rat ar = dot(a, r);
                if (ar != 0) r = sub(r, scale(w, ar / aw));
                r = direction_normal(std::move(r));
            }
            rays.push_back(direction_normal(aw < 0 ? w : scale(w, Rat(-1))));
        } else {
            std::vector<Rat> val(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i]);

            std::vector<RatVec> next;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] <= 0) next.push_back(rays[i]);
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (val[i] <= 0) continue;
                for (std::size_t j = 0; j < rays.size(); ++j) {
                    if (val[j] >= 0) continue;
                    if (!adjacent(rays[i], rays[j])) continue;
                    RatVec comb = sub(scale(rays[j], val[i]), scale(rays[i], val[j]));
                    if (is_zero_vec(comb)) continue;
                    comb = direction_normal(std::move(comb));
                    if (!contains_direction(next, comb)) next.push_back(std::move(comb));
                }
            }
            rays = std::move(next);
        }
        processed.push_back(a);
    }
    return {std::move(rays), std::move(lin)};
}

VPolyhedron to_generators(const HPolyhedron& P) {
    const std::size_t d = P.dim;
    std::vector<RatVec> rows;
    auto homogenize = [&](const LinConstraint& c, bool negated) {
        RatVec r(d + 1);
        const Rat sgn = negated ? Rat(-1) : Rat(1);
        r[0] = -sgn * c.rhs;
        for (std::size_t j = 0; j < d; ++j) r[j + 1] = sgn * c.coeffs[j];
        rows.push_back(std::move(r));
    };
    for (const LinConstraint& c : P.equalities) {
        homogenize(c, false);
        homogenize(c, true);
    }
    for (const LinConstraint& c : P.inequalities) homogenize(c, false);
    {
        RatVec t_nonneg = zero_vec(d + 1);
        t_nonneg[0] = -1;
        rows.push_back(std::move(t_nonneg));
    }

    const DDCone cone = dd_cone(rows, d + 1);

    VPolyhedron V;
    V.dim = d;
    V.lineality.ambient_dim = d;
    for (const RatVec& r : cone.rays) {
        if (r[0] < 0) throw std::logic_error("to_generators: ray below t=0");
        RatVec x(r.begin() + 1, r.end());
        if (r[0] > 0) {
            if (r[0] != 1)
                for (Rat& v : x) v /= r[0];
            V.points.push_back(std::move(x));
        } else if (!is_zero_vec(x)) {
            V.rays.push_back(direction_normal(std::move(x)));
        }
    }
    std::vector<RatVec> linvecs;
    for (const RatVec& l : cone.lineality) {
        if (l[0] != 0) throw std::logic_error("to_generators: lineality with t component");
        linvecs.emplace_back(l.begin() + 1, l.end());
    }
    V.lineality = span_of(d, linvecs);

    if (V.points.empty()) return VPolyhedron::empty(d);
    return V;
}

HPolyhedron to_halfspaces(const VPolyhedron& V) {
    const std::size_t d = V.dim;
    if (V.is_empty()) return HPolyhedron::empty(d);

    // Rows of the polar cone of the homogenization; its generators are the
    // facet normals of V.
    std::vector<RatVec> rows;
    for (const RatVec& u : V.points) {
        RatVec r(d + 1);
        r[0] = 1;
        for (std::size_t j = 0; j < d; ++j) r[j + 1] = u[j];
        rows.push_back(std::move(r));
    }
    for (const RatVec& v : V.rays) {
        RatVec r(d + 1, Rat(0));
        for (std::size_t j = 0; j < d; ++j) r[j + 1] = v[j];
        rows.push_back(std::move(r));
    }
    for (const RatVec& w : V.lineality.basis) {
        RatVec r(d + 1, Rat(0));
        for (std::size_t j = 0; j < d; ++j) r[j + 1] = w[j];
        rows.push_back(r);
        for (Rat& x : r) x = -x;
        rows.push_back(std::move(r));
    }

    const DDCone polar = dd_cone(rows, d + 1);

    HPolyhedron H;
    H.dim = d;
    for (const RatVec& r : polar.rays) {
        RatVec a(r.begin() + 1, r.end());
        if (is_zero_vec(a)) continue;  // trivial 0 <= -c0 with c0 <= 0
        H.inequalities.push_back({std::move(a), Rat(-r[0]), Rel::LE});
    }
    for (const RatVec& l : polar.lineality) {
        RatVec a(l.begin() + 1, l.end());
        if (is_zero_vec(a)) continue;
        H.equalities.push_back({std::move(a), Rat(-l[0]), Rel::EQ});
    }
    return H;
}

VPolyhedron minkowski_sum(const VPolyhedron& P, const VPolyhedron& Q) {
    if (P.dim != Q.dim) throw std::invalid_argument("minkowski_sum: dim mismatch");
    if (P.is_empty() || Q.is_empty()) return VPolyhedron::empty(P.dim);

    VPolyhedron S;
    S.dim = P.dim;
    S.lineality.ambient_dim = P.dim;
    for (const RatVec& p : P.points)
        for (const RatVec& q : Q.points) {
            RatVec s = add(p, q);
            if (std::find(S.points.begin(), S.points.end(), s) == S.points.end())
                S.points.push_back(std::move(s));
        }
    for (const RatVec& v : P.rays)
        if (!contains_direction(S.rays, v)) S.rays.push_back(v);
    for (const RatVec& v : Q.rays)
        if (!contains_direction(S.rays, v)) S.rays.push_back(v);
    std::vector<RatVec> lins = P.lineality.basis;
    lins.insert(lins.end(), Q.lineality.basis.begin(), Q.lineality.basis.end());
    S.lineality = span_of(P.dim, lins);
    return S;
}

VPolyhedron affine_image(const VPolyhedron& P, const RatMat& map, const RatVec& offset) {
    const std::size_t target = map.size();
    if (!map.empty() && map[0].size() != P.dim)
        throw std::invalid_argument("affine_image: shape mismatch");
    if (P.is_empty()) return VPolyhedron::empty(target);

    VPolyhedron R;
    R.dim = target;
    R.lineality.ambient_dim = target;
    for (const RatVec& u : P.points) {
        RatVec y = add(mat_vec(map, u), offset);
        if (std::find(R.points.begin(), R.points.end(), y) == R.points.end())
            R.points.push_back(std::move(y));
    }
    for (const RatVec& v : P.rays) {
        RatVec y = mat_vec(map, v);
        if (is_zero_vec(y)) continue;
        y = direction_normal(std::move(y));
        if (!contains_direction(R.rays, y)) R.rays.push_back(std::move(y));
    }
    std::vector<RatVec> lins;
    for (const RatVec& w : P.lineality.basis) lins.push_back(mat_vec(map, w));
    R.lineality = span_of(target, lins);
    return R;
}

HPolyhedron affine_preimage(const HPolyhedron& P, const RatMat& map, const RatVec& offset) {
    if (P.dim != map.size()) throw std::invalid_argument("affine_preimage: shape mismatch");
    const std::size_t source = map.empty() ? 0 : map[0].size();
    HPolyhedron R;
    R.dim = source;
    auto pull = [&](const LinConstraint& c) {
        LinConstraint r;
        r.coeffs = vec_mat(c.coeffs, map);
        r.rhs = c.rhs - dot(c.coeffs, offset);
        r.rel = c.rel;
        return r;
    };
    for (const LinConstraint& c : P.equalities) R.equalities.push_back(pull(c));
    for (const LinConstraint& c : P.inequalities) R.inequalities.push_back(pull(c));
    return R;
}

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q) {
    if (P.dim != Q.dim) throw std::invalid_argument("intersect: dim mismatch");
    HPolyhedron R = P;
    R.equalities.insert(R.equalities.end(), Q.equalities.begin(), Q.equalities.end());
    R.inequalities.insert(R.inequalities.end(), Q.inequalities.begin(), Q.inequalities.end());
    return R;
}

bool is_empty(const HPolyhedron& P) { return !strict_feasible(P.all_rows(), P.dim).feasible; }

bool contains(const HPolyhedron& P, const RatVec& x) {
    for (const LinConstraint& c : P.equalities)
        if (!c.satisfied_by(x)) return false;
    for (const LinConstraint& c : P.inequalities)
        if (!c.satisfied_by(x)) return false;
    return true;
}

bool contains(const VPolyhedron& V, const RatVec& x) {
    // x = sum lambda_i u_i + sum mu_j v_j + lineality with lambda >= 0 summing
    // to one and mu >= 0: a feasibility LP in the coefficients.
    if (V.is_empty()) return false;
    const std::size_t k = V.points.size(), l = V.rays.size(), w = V.lineality.basis.size();
    const std::size_t vars = k + l + w;
    ConstraintList rows;
    for (std::size_t c = 0; c < V.dim; ++c) {
        LinConstraint eq;
        eq.coeffs.resize(vars);
        for (std::size_t i = 0; i < k; ++i) eq.coeffs[i] = V.points[i][c];
        for (std::size_t j = 0; j < l; ++j) eq.coeffs[k + j] = V.rays[j][c];
        for (std::size_t t = 0; t < w; ++t) eq.coeffs[k + l + t] = V.lineality.basis[t][c];
        eq.rhs = x[c];
        eq.rel = Rel::EQ;
        rows.push_back(std::move(eq));
    }
    {
        LinConstraint sum;
        sum.coeffs = zero_vec(vars);
        for (std::size_t i = 0; i < k; ++i) sum.coeffs[i] = 1;
        sum.rhs = 1;
        sum.rel = Rel::EQ;
        rows.push_back(std::move(sum));
    }
    for (std::size_t i = 0; i < k + l; ++i) {
        LinConstraint nonneg;
        nonneg.coeffs = zero_vec(vars);
        nonneg.coeffs[i] = -1;
        nonneg.rhs = 0;
        nonneg.rel = Rel::LE;
        rows.push_back(std::move(nonneg));
    }
    return strict_feasible(rows, vars).feasible;
}

bool inclusion_check(const HPolyhedron& P, const HPolyhedron& Q) {
    if (P.dim != Q.dim) throw std::invalid_argument("inclusion_check: dim mismatch");
    if (is_empty(P)) return true;
    const ConstraintList domain = P.all_rows();
    auto bounded_by = [&](const RatVec& a, const Rat& beta, bool from_below) {
        const LpResult lp = lp_optimize(a, from_below ? Sense::Min : Sense::Max, domain);
        if (lp.status != LpStatus::Optimal) return false;
        return from_below ? lp.value >= beta : lp.value <= beta;
    };
    for (const LinConstraint& c : Q.inequalities)
        if (!bounded_by(c.coeffs, c.rhs, false)) return false;
    for (const LinConstraint& c : Q.equalities)
        if (!bounded_by(c.coeffs, c.rhs, false) || !bounded_by(c.coeffs, c.rhs, true))
            return false;
    return true;
}

HPolyhedron normalize(const HPolyhedron& P) {
    if (is_empty(P)) return HPolyhedron::empty(P.dim);
    HPolyhedron R;
    R.dim = P.dim;
    for (const LinConstraint& c : P.equalities) {
        if (std::find(R.equalities.begin(), R.equalities.end(), c) == R.equalities.end())
            R.equalities.push_back(c);
    }
    std::vector<LinConstraint> pending;
    for (const LinConstraint& c : P.inequalities) {
        if (is_zero_vec(c.coeffs) && c.rhs >= 0) continue;
        if (std::find(pending.begin(), pending.end(), c) == pending.end()) pending.push_back(c);
    }
    for (std::size_t i = 0; i < pending.size();) {
        ConstraintList others = R.equalities;
        for (std::size_t j = 0; j < pending.size(); ++j)
            if (j != i) others.push_back(pending[j]);
        const LpResult lp = lp_optimize(pending[i].coeffs, Sense::Max, others);
        if (lp.status == LpStatus::Optimal && lp.value <= pending[i].rhs) {
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    R.inequalities = std::move(pending);
    return R;
}

ConsolidateResult consolidate_union(const std::vector<HPolyhedron>& parts) {
    const std::size_t dim = parts.empty() ? 0 : parts[0].dim;
    std::vector<const HPolyhedron*> live;
    for (const HPolyhedron& p : parts) {
        if (p.dim != dim) throw std::invalid_argument("consolidate_union: dim mismatch");
        if (!is_empty(p)) live.push_back(&p);
    }
    if (live.empty()) return {true, HPolyhedron::empty(dim)};

    VPolyhedron hull;
    hull.dim = dim;
    hull.lineality.ambient_dim = dim;
    std::vector<RatVec> lins;
    for (const HPolyhedron* p : live) {
        const VPolyhedron g = to_generators(*p);
        for (const RatVec& u : g.points)
            if (std::find(hull.points.begin(), hull.points.end(), u) == hull.points.end())
                hull.points.push_back(u);
        for (const RatVec& r : g.rays)
            if (!contains_direction(hull.rays, r)) hull.rays.push_back(r);
        lins.insert(lins.end(), g.lineality.basis.begin(), g.lineality.basis.end());
    }
    hull.lineality = span_of(dim, lins);

    const HPolyhedron hull_h = to_halfspaces(hull);
    for (const HPolyhedron* p : live) {
        if (!inclusion_check(*p, hull_h))
            throw std::logic_error("consolidate_union: hull misses a part");
    }

    // hull subset-of union, via emptiness of hull minus all parts
    Region cover;
    cover.dim = dim;
    for (const HPolyhedron* p : live)
        cover.pieces.push_back(SemiClosedPolyhedron::from_closed(*p));
    if (region_covers(cover, SemiClosedPolyhedron::from_closed(hull_h)).covered)
        return {true, hull_h};
    return {false, HPolyhedron::empty(dim)};
}

long dim_of(const VPolyhedron& V) {
    if (V.is_empty()) return -1;
    std::vector<RatVec> dirs;
    for (std::size_t i = 1; i < V.points.size(); ++i) dirs.push_back(sub(V.points[i], V.points[0]));
    dirs.insert(dirs.end(), V.rays.begin(), V.rays.end());
    dirs.insert(dirs.end(), V.lineality.basis.begin(), V.lineality.basis.end());
    return static_cast<long>(span_of(V.dim, dirs).dim());
}

long dim_of(const HPolyhedron& P) { return dim_of(to_generators(P)); }

RatVec relint_point(const VPolyhedron& V) {
    if (V.is_empty()) throw std::invalid_argument("relint_point: empty polyhedron");
    RatVec x = zero_vec(V.dim);
    for (const RatVec& u : V.points) x = add(x, u);
    for (Rat& v : x) v /= Rat(static_cast<long>(V.points.size()));
    for (const RatVec& r : V.rays) x = add(x, r);
    return x;
}

}  // namespace pwlvo
