#ifndef PWLVO_TEST_HELPERS_HPP
#define PWLVO_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "pwlvo/polyhedron.hpp"
#include "pwlvo/rational.hpp"
#include "pwlvo/semiclosed.hpp"

namespace pwlvo::testing {

inline RatVec vec(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

inline RatVec vecq(std::initializer_list<const char*> xs) {
    RatVec v;
    for (const char* x : xs) v.push_back(parse_rat(x));
    return v;
}

inline RatMat mat(std::initializer_list<std::initializer_list<int>> rows) {
    RatMat m;
    for (auto& r : rows) m.push_back(vec(r));
    return m;
}

inline LinConstraint row(std::initializer_list<int> coeffs, int rhs, Rel rel) {
    LinConstraint c;
    for (int x : coeffs) c.coeffs.push_back(Rat(x));
    c.rhs = rhs;
    c.rel = rel;
    return c;
}

inline HPolyhedron hpoly(std::size_t dim, std::initializer_list<LinConstraint> rows) {
    HPolyhedron p;
    p.dim = dim;
    for (const LinConstraint& c : rows) {
        if (c.rel == Rel::EQ)
            p.equalities.push_back(c);
        else
            p.inequalities.push_back(c);
    }
    return p;
}

inline SemiClosedPolyhedron scpoly(std::size_t dim, std::initializer_list<LinConstraint> rows) {
    SemiClosedPolyhedron s;
    s.dim = dim;
    for (const LinConstraint& c : rows) s.push(c);
    return s;
}

// axis-aligned box [-b, b]^dim
inline HPolyhedron box(std::size_t dim, int b) {
    HPolyhedron p;
    p.dim = dim;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec e = zero_vec(dim);
        e[j] = 1;
        p.inequalities.push_back({e, Rat(b), Rel::LE});
        RatVec me = zero_vec(dim);
        me[j] = -1;
        p.inequalities.push_back({me, Rat(b), Rel::LE});
    }
    return p;
}

inline Rat small_rat(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

// all rational grid points of [lo, hi]^dim with the given number of steps
inline std::vector<RatVec> grid_points(std::size_t dim, int lo, int hi, int steps) {
    std::vector<RatVec> pts{RatVec{}};
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<RatVec> next;
        for (const RatVec& p : pts) {
            for (int s = 0; s <= steps; ++s) {
                RatVec q = p;
                q.push_back(Rat(lo) + Rat(s * (hi - lo), steps));
                next.push_back(std::move(q));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

}  // namespace pwlvo::testing

#endif
