#pragma once

// Classical sl(n) input data for the quantum construction: the Cartan matrix,
// the weight-shifted Cartan generators H~_i expressed over the simple ones,
// the integer exponent table governing Ad_{K_m}(X_j), and the fundamental
// (vector) representation with exact rational entries.

#include "qgauss/ring.hpp"

namespace qgauss {

// Dense matrix over exact rationals; just enough linear algebra for the
// representation-side cross checks (products, commutators, comparisons).
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    // Elementary matrix E_ij (0-based indices).
    static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Rat& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& rhs) const;
    bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

struct ChevalleyData {
    int n = 0;
    // Cartan matrix A_{ij}, (n-1) x (n-1), 0-based storage for 1-based roots.
    std::vector<std::vector<int>> cartan;
    // htilde[i][k]: coefficient of H_{k+1} in H~_{i+1}, for i = 0..n-1.  The
    // last row belongs to H~_n = -(1/n) sum k H_k; the rows sum to zero.
    std::vector<std::vector<Rat>> htilde;
    // ad_exp_plus[m][j]: integer c with K_{m+1} X_{j+1}^(+) K_{m+1}^-1
    // = q^c X_{j+1}^(+); the X^(-) table is its negative.  m = 0..n-1 covers
    // K_n = (K_1 ... K_{n-1})^-1 in the last row.
    std::vector<std::vector<int>> ad_exp_plus;

    int ad_plus(int m, int j) const { return ad_exp_plus.at(m).at(j); }
    int ad_minus(int m, int j) const { return -ad_exp_plus.at(m).at(j); }

    nlohmann::json to_json() const;
};

// Builds the full table for sl(n), n >= 2.  The adjoint exponents come from
// contracting the H~ coefficients with the Cartan matrix; the contraction is
// checked to be integral and to collapse to delta_{m,j} - delta_{m,j+1}.
ChevalleyData build_chevalley(int n);

// Fundamental representation on C^n.  The quantum torus elements K_i are
// diagonal in this basis with entries v^(n * eigenvalue of H~_i), which are
// honest monomials in the root variable v, q = v^n.
struct FundamentalRep {
    int n = 0;
    VarSetPtr vars;      // must contain the root variable
    std::string vname;
    std::vector<RatMatrix> h;        // H_i,  i = 1..n-1
    std::vector<RatMatrix> htilde;   // H~_i, i = 1..n
    std::vector<RatMatrix> xp, xm;   // X_i^(+), X_i^(-)
    // kdiag[i][j]: j-th diagonal entry of K_{i+1}, i = 0..n-1, as a monomial
    // in the root variable.
    std::vector<std::vector<LaurentPoly>> kdiag;
};

FundamentalRep fundamental_rep(int n, VarSetPtr vars, const std::string& vname = "v");

}  // namespace qgauss
