#pragma once

// Construction of the quantum-group generator matrices from classical data:
// the images of the Chevalley generators under the Borel homomorphisms, the
// commutator ladder that reconstructs the deep off-diagonal entries, the
// closed-form entries it must agree with, and the assembled T matrix.  Also
// the two-parameter 2x2 variant and the one-slot realization built on the
// dual algebra.

#include "qgauss/cartan.hpp"
#include "qgauss/opmatrix.hpp"
#include "qgauss/rmatrix.hpp"

namespace qgauss {

// Everything the sl(n) construction needs: classical tables plus the slot
// algebra U^-_1 x ... x U^-_{n-1} x U^+_1 x ... x U^+_{n-1} over the
// variables q, v, lambda, f_i, g_i.  Slot s hosts the torus copies K_1 ..
// K_{n-1} and one X generator; the commutation scalars are q to the adjoint
// exponents, with inverted sign on the lowering side.
struct SlModel {
    int n = 0;
    ChevalleyData chev;
    SignaturePtr sig;

    // slot index of U^-_i / U^+_i for the 1-based root index i
    std::size_t minus_slot(int i) const { return static_cast<std::size_t>(i - 1); }
    std::size_t plus_slot(int i) const { return static_cast<std::size_t>(n - 1 + i - 1); }

    LaurentPoly qvar() const { return LaurentPoly::variable(sig->vars(), "q"); }
    LaurentPoly fvar(int i) const;
    LaurentPoly gvar(int i) const;
};

SlModel sl_model(int n);

// The two triangular factors of the Gauss decomposition in their slot
// realization.  Row/column indices are 0-based; the algebra's diagonal
// entries are torus words, so both factors are invertible.
struct GaussTriple {
    int n = 0;
    SignaturePtr sig;
    OpMatrix tminus, tplus;
};

// Diagonal plus first off-diagonal entries only: the images of K_i and of
// the simple raising and lowering generators.
GaussTriple delta_generators(const SlModel& m);

// All entries written directly: products of f_j (g_j), a leading torus
// block, a run of X factors, and a trailing torus block.
GaussTriple closed_form(const SlModel& m);

// Fills the missing entries of a diagonal-plus-first-off-diagonal seed by
// the nested-commutator ladder, dividing by lambda_binding^(k-1) at depth k.
// The division is exact only when lambda_binding is q - q^-1; a scaled
// binding throws std::domain_error from the exact division, and a formal
// binding survives but fails the comparison with closed_form.
GaussTriple ladder_reconstruct(const SlModel& m, const GaussTriple& seed,
                               const LaurentPoly& lambda_binding);

// T = T^(-) (x) T^(+); the factors live on disjoint slot sets.
OpMatrix assemble_T(const GaussTriple& t);

// The unipotent-diagonal-unipotent factorization with one shared diagonal:
// t_d(i) = t^(-)_ii t^(+)_ii, t_l = T^(-) diag(t^(-))^-1, t_u =
// diag(t^(+))^-1 T^(+).  The recombined t_minus = t_l t_d and t_plus =
// t_d t_u are the factors whose mixed relations close, because they share
// the diagonal instead of splitting it across disjoint slots.
struct GaussFactors {
    OpMatrix t_l, t_d, t_u;
    OpMatrix t_minus, t_plus;
};

GaussFactors identified_factors(const GaussTriple& t);

// Scales one entry (0-based) of the matching factor by q: the plus factor
// for j >= i, the minus factor for j < i.  Negative control for the checks.
GaussTriple perturb_entry(const GaussTriple& t, std::size_t i, std::size_t j);

// 2x2 two-parameter variant over k, p, q with its own R-matrix.  The torus
// generators per slot are G1 = (k/p)^(H/2) and G2 = (k/q)^(H/2).
struct GlpqModel {
    SignaturePtr sig;
    RMatrix r;
    OpMatrix tminus, tplus, t;
};

GlpqModel build_glpq2();

// One-slot realization on the dual algebra: commutation relations
// [H~, X~+-] = X~+-, [X~+, X~-] = 0, torus W = q^H~, and the three-factor
// form T = T_L T_D T_U.
struct DualSl2Model {
    SignaturePtr sig;
    OpMatrix t_l, t_d, t_u, t;
};

DualSl2Model build_dual_sl2();

}  // namespace qgauss
