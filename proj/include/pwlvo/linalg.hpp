#ifndef PWLVO_LINALG_HPP
#define PWLVO_LINALG_HPP

#include "pwlvo/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pwlvo {

// A linear subspace of Q^n given by a basis of linearly independent vectors.
// The empty basis is the zero subspace.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<RatVec> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const RatVec& v) const;
};

// Row-reduces the matrix in place and returns the pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Basis of {x : A x = 0}, deterministic (free columns in increasing order).
std::vector<RatVec> kernel(const RatMat& A, std::size_t cols);

struct LinearSolution {
    RatVec particular;
    Subspace kernel;
};

// Exact solution of A x = b; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMat& A, const RatVec& b);

// Complement spanned by the first standard basis vectors independent of sub.
// Concatenated with sub.basis it spans the ambient space.
Subspace complement(const Subspace& sub);

// Reduces a spanning set to a linearly independent one (RREF rows).
Subspace span_of(std::size_t ambient_dim, const std::vector<RatVec>& vectors);

// Inverse of a square nonsingular matrix; throws std::invalid_argument otherwise.
RatMat invert(const RatMat& A);

}  // namespace pwlvo

#endif
