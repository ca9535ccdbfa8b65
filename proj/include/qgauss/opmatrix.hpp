#pragma once

// Matrices with entries in a slot algebra, plus the handful of constructions
// the verification layer is built from: the Gauss product of factors with
// disjoint slot support, RTT residuals against a numeric R grid, the quantum
// determinant, and inverses of triangular matrices.

#include "qgauss/polymat.hpp"
#include "qgauss/slotalg.hpp"

namespace qgauss {

class OpMatrix {
public:
    // Zero-filled rows x cols matrix over the signature's algebra.
    OpMatrix(SignaturePtr sig, std::size_t rows, std::size_t cols);
    static OpMatrix identity(SignaturePtr sig, std::size_t n);

    const SignaturePtr& sig() const { return sig_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    AlgebraElement& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const AlgebraElement& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    OpMatrix operator+(const OpMatrix& rhs) const;
    OpMatrix operator-(const OpMatrix& rhs) const;
    OpMatrix operator*(const OpMatrix& rhs) const;
    bool operator==(const OpMatrix& rhs) const;
    bool operator!=(const OpMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    // Slots any entry touches.
    std::vector<bool> support() const;
    // Row-major position of the first nonzero entry, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    nlohmann::json to_json() const;

private:
    SignaturePtr sig_;
    std::size_t rows_, cols_;
    std::vector<AlgebraElement> a_;
};

// Matrix product of factors living on disjoint slot sets; this is the (x)
// product of the Gauss decomposition.  Throws std::invalid_argument when the
// supports overlap.
OpMatrix gauss_product(const OpMatrix& a, const OpMatrix& b);

// Residual of S A_1 B_2 - B_2 A_1 S on the n^2-dimensional composite space,
// composite index (i, k) |-> i*n + k (first tensor factor slow).  S is an
// n^2 x n^2 grid over the same variables as the algebra.  The plain RTT
// residual is the special case A = B = T.
OpMatrix rtt_mixed_residual(const PolyMatrix& s, const OpMatrix& a, const OpMatrix& b);
OpMatrix rtt_residual(const PolyMatrix& r, const OpMatrix& t);

// Quantum determinant: sum over permutations of (-q)^inversions times the
// row-ordered product t_{1,s(1)} ... t_{n,s(n)}.
AlgebraElement qdet(const OpMatrix& t, const LaurentPoly& q);

enum class Triangle { lower, upper };

// Inverse of a triangular matrix whose diagonal entries are invertible
// torus monomials, via the terminating Neumann series of the strictly
// triangular part.  Throws std::invalid_argument when entries sit on the
// wrong side of the diagonal and std::domain_error when a diagonal entry is
// not invertible.
OpMatrix triangular_inverse(const OpMatrix& t, Triangle shape);

}  // namespace qgauss
