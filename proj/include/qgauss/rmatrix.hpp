#pragma once

// The R-matrix catalog.  Every constructor verifies the Yang-Baxter equation
// on the triple tensor space before handing the grid out, so a matrix that
// reaches the verification layer is guaranteed to be a genuine R-matrix and
// any RTT failure points at the T side.

#include "qgauss/polymat.hpp"

namespace qgauss {

struct RMatrix {
    int n = 0;
    std::string name;
    PolyMatrix grid;  // n^2 x n^2, composite index (i, k) |-> i*n + k

    const LaurentPoly& at(std::size_t r, std::size_t c) const { return grid.at(r, c); }
};

// Standard R for the n-dimensional vector representation:
//   q on (i,i),(i,i);  1 on (i,k),(i,k) for i != k;
//   lambda = q - q^-1 on (i,k),(k,i) for i > k.
RMatrix standard_r(VarSetPtr vars, int n, const std::string& qname = "q");

// Same diagonal with the lambda block on the transposed positions (i < k).
// Also a Yang-Baxter solution, but the wrong convention for our T matrices;
// kept so the calibration test can reject it at runtime.
RMatrix standard_r_flipped(VarSetPtr vars, int n, const std::string& qname = "q");

// Two-parameter 4 x 4 R-matrix over k, p, q:
//   diag(k, p, q, k) with k - p q k^-1 in the lower mixing slot.
RMatrix rpq(VarSetPtr vars, const std::string& kname = "k", const std::string& pname = "p",
            const std::string& qname = "q");

struct RParts {
    PolyMatrix diag;   // diagonal part R_d
    PolyMatrix perm;   // flip P, (i,k) |-> (k,i)
    PolyMatrix rplus;  // P R
};

// Splits R as R_d plus an off-diagonal rest and pairs it with the flip.
RParts derived_parts(const RMatrix& r);

// R12 R13 R23 - R23 R13 R12 on the n^3-dimensional space; zero for every
// catalog entry (the constructors already insist on it).
PolyMatrix ybe_residual(const RMatrix& r);

}  // namespace qgauss
