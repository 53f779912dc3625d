#ifndef PWLVO_CONSTRAINT_HPP
#define PWLVO_CONSTRAINT_HPP

#include "pwlvo/rational.hpp"

#include <vector>

namespace pwlvo {

enum class Rel { EQ, LE, LT };

// One linear row: coeffs . x  (=|<=|<)  rhs.
struct LinConstraint {
    RatVec coeffs;
    Rat rhs;
    Rel rel = Rel::LE;

    bool satisfied_by(const RatVec& x) const {
        const Rat v = dot(coeffs, x);
        switch (rel) {
            case Rel::EQ: return v == rhs;
            case Rel::LE: return v <= rhs;
            case Rel::LT: return v < rhs;
        }
        return false;
    }

    bool operator==(const LinConstraint& other) const {
        return rel == other.rel && rhs == other.rhs && coeffs == other.coeffs;
    }
};

inline LinConstraint make_row(RatVec coeffs, Rat rhs, Rel rel) {
    return LinConstraint{std::move(coeffs), std::move(rhs), rel};
}

using ConstraintList = std::vector<LinConstraint>;

}  // namespace pwlvo

#endif
