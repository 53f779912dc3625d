#ifndef PWLVO_TEST_FIXTURES_HPP
#define PWLVO_TEST_FIXTURES_HPP

#include "pwlvo/pwl.hpp"
#include "pwlvo/semiclosed.hpp"
#include "support/helpers.hpp"

namespace pwlvo::testing {

// Two-piece problem on the quadrant pieces {t2 >= 0} and {t2 <= 0} with
// feasible set {t1 <= 0, t2 <= 1} and the nonpositive-orthant ordering cone.
// The convex variant uses (t1 - t2, t2) above the seam and (t1 + t2, t2)
// below; the nonconvex variant swaps the two maps.
inline Problem seam_problem(bool convex) {
    Problem prob;
    prob.f.source_dim = 2;
    prob.f.image_dim = 2;

    Piece upper;
    upper.domain = hpoly(2, {row({0, -1}, 0, Rel::LE)});
    Piece lower;
    lower.domain = hpoly(2, {row({0, 1}, 0, Rel::LE)});
    const RatMat fold_left = mat({{1, -1}, {0, 1}});
    const RatMat fold_right = mat({{1, 1}, {0, 1}});
    upper.map = convex ? fold_left : fold_right;
    lower.map = convex ? fold_right : fold_left;
    upper.offset = vec({0, 0});
    lower.offset = vec({0, 0});
    prob.f.pieces = {upper, lower};

    prob.feasible = hpoly(2, {row({1, 0}, 0, Rel::LE), row({0, 1}, 1, Rel::LE)});
    prob.cone = build_cone(2, {vec({1, 0}), vec({0, 1})});
    return prob;
}

inline Problem fixture_a() { return seam_problem(true); }
inline Problem fixture_b() { return seam_problem(false); }

// Expected solution sets of the two fixtures, in decision space.
inline Region fixture_a_sol() {
    return Region::single(scpoly(2, {row({1, 0}, 0, Rel::EQ), row({0, -1}, 0, Rel::LE),
                                     row({0, 1}, 1, Rel::LE)}));
}

inline Region fixture_a_wsol() {
    Region r = fixture_a_sol();
    r.pieces.push_back(scpoly(2, {row({1, 0}, 0, Rel::LE), row({0, 1}, 1, Rel::EQ)}));
    return r;
}

inline Region fixture_b_sol() {
    Region r;
    r.dim = 2;
    r.pieces.push_back(scpoly(2, {row({1, 0}, 0, Rel::EQ), row({0, 1}, 1, Rel::EQ)}));
    r.pieces.push_back(scpoly(2, {row({1, 0}, 0, Rel::EQ), row({0, 1}, -1, Rel::LT)}));
    return r;
}

inline Region fixture_b_wsol() {
    Region r;
    r.dim = 2;
    r.pieces.push_back(scpoly(2, {row({1, 0}, 0, Rel::LE), row({0, 1}, 1, Rel::EQ)}));
    r.pieces.push_back(scpoly(2, {row({1, 0}, 0, Rel::EQ), row({0, 1}, -1, Rel::LE)}));
    return r;
}

}  // namespace pwlvo::testing

#endif
