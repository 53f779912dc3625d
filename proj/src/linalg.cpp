#include "pwlvo/linalg.hpp"

#include <stdexcept>

namespace pwlvo {

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> kernel(const RatMat& A, std::size_t cols) {
    RatMat m = A;
    for (auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("kernel: ragged matrix");
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v = zero_vec(cols);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_linear(const RatMat& A, const RatVec& b) {
    if (A.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();

    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (A[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    RatVec particular = zero_vec(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug[i][cols];

    LinearSolution sol;
    sol.particular = std::move(particular);
    sol.kernel.ambient_dim = cols;
    sol.kernel.basis = kernel(A, cols);
    return sol;
}

bool Subspace::contains(const RatVec& v) const {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::contains: dim mismatch");
    if (is_zero_vec(v)) return true;
    if (basis.empty()) return false;
    RatMat m;
    for (const RatVec& w : basis) m.push_back(w);
    const std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == r0;
}

Subspace complement(const Subspace& sub) {
    const std::size_t n = sub.ambient_dim;
    RatMat m;
    for (const RatVec& w : sub.basis) m.push_back(w);
    std::size_t current = rank(m);

    Subspace result;
    result.ambient_dim = n;
    for (std::size_t i = 0; i < n && current + result.basis.size() < n; ++i) {
        RatVec e = zero_vec(n);
        e[i] = 1;
        m.push_back(e);
        if (rank(m) == current + result.basis.size() + 1) {
            result.basis.push_back(std::move(e));
        } else {
            m.pop_back();
        }
    }
    return result;
}

Subspace span_of(std::size_t ambient_dim, const std::vector<RatVec>& vectors) {
    RatMat m;
    for (const RatVec& v : vectors) {
        if (v.size() != ambient_dim) throw std::invalid_argument("span_of: dim mismatch");
        if (!is_zero_vec(v)) m.push_back(v);
    }
    const std::vector<std::size_t> pivots = rref(m);
    Subspace s;
    s.ambient_dim = ambient_dim;
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis.push_back(m[i]);
    return s;
}

RatMat invert(const RatMat& A) {
    const std::size_t n = A.size();
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("invert: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = 1;
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        throw std::invalid_argument("invert: singular matrix");
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace pwlvo
