#ifndef PWLVO_RATIONAL_HPP
#define PWLVO_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pwlvo {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator as long as every value is built through canonical channels;
// parse_rat below is the only place non-canonical input can enter.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "p" or "p/q" with integer p, q (q != 0). Anything else, in
// particular floating-point literals, is rejected. Result is canonical.
Rat parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& value);

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

inline RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec scale(const RatVec& a, const Rat& c) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

// y = A x for a dense row-major matrix.
inline RatVec mat_vec(const RatMat& A, const RatVec& x) {
    RatVec y(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
    return y;
}

// row vector times matrix: (a^T A) as a vector of length cols(A).
inline RatVec vec_mat(const RatVec& a, const RatMat& A) {
    if (A.empty()) return {};
    if (a.size() != A.size()) throw std::invalid_argument("vec_mat: shape mismatch");
    RatVec r(A[0].size(), Rat(0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) r[j] += a[i] * A[i][j];
    return r;
}

inline RatMat mat_mul(const RatMat& A, const RatMat& B) {
    RatMat C(A.size(), RatVec(B.empty() ? 0 : B[0].size(), Rat(0)));
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != B.size()) throw std::invalid_argument("mat_mul: shape mismatch");
        for (std::size_t k = 0; k < B.size(); ++k)
            for (std::size_t j = 0; j < B[k].size(); ++j) C[i][j] += A[i][k] * B[k][j];
    }
    return C;
}

// Scales a nonzero vector so its first nonzero entry is +/-1. Used to compare
// ray directions and constraint normals up to positive factors.
inline RatVec direction_normal(RatVec v) {
    for (const Rat& x : v) {
        if (x != 0) {
            Rat d = abs(x);
            for (Rat& y : v) y /= d;
            return v;
        }
    }
    return v;
}

}  // namespace pwlvo

#endif
