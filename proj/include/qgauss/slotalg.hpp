#pragma once

// Normal-form arithmetic in tensor products of Borel-type slot algebras.
// Each slot carries a free abelian torus (generators K_m) and a commuting
// family of X generators, tied together by unit-monomial commutation
// scalars: K_m X_g = c_{gm} * X_g K_m.  A word is normal when every slot
// reads torus-monomial-first, X-powers-second; elements are finite integer
// combinations of normal words with Laurent-polynomial coefficients.
// Multiplication only ever creates the scalar c_{gm}^{-r a} when X^r crosses
// K^a, so products of normal words stay single normal words.

#include "qgauss/ring.hpp"

namespace qgauss {

struct SlotSpec {
    std::string name;                // display label ("U-1", "U+2", ...)
    std::vector<std::string> torus;  // torus generator names
    std::vector<std::string> xgen;   // X generator names (they commute)
    // comm[g][m]: unit monomial c with K_m X_g = c * X_g K_m.
    std::vector<std::vector<LaurentPoly>> comm;
};

class AlgebraSignature {
public:
    // Validates that every commutation scalar is a single term with
    // coefficient +-1 over the given variables.
    AlgebraSignature(VarSetPtr vars, std::vector<SlotSpec> slots);

    static std::shared_ptr<const AlgebraSignature> make(VarSetPtr vars,
                                                        std::vector<SlotSpec> slots);

    const VarSetPtr& vars() const { return vars_; }
    std::size_t slot_count() const { return slots_.size(); }
    const SlotSpec& slot(std::size_t s) const { return slots_.at(s); }

    // Cached commutation data: exponent vector and sign of comm[g][m].
    const ExpVec& comm_exp(std::size_t s, std::size_t g, std::size_t m) const {
        return comm_exp_.at(s).at(g).at(m);
    }
    int comm_sign(std::size_t s, std::size_t g, std::size_t m) const {
        return comm_sign_.at(s).at(g).at(m);
    }

    bool operator==(const AlgebraSignature& rhs) const;
    bool operator!=(const AlgebraSignature& rhs) const { return !(*this == rhs); }

    nlohmann::json to_json() const;

private:
    VarSetPtr vars_;
    std::vector<SlotSpec> slots_;
    std::vector<std::vector<std::vector<ExpVec>>> comm_exp_;
    std::vector<std::vector<std::vector<int>>> comm_sign_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

// Normal word in one slot: torus exponents (any sign), X powers (>= 0).
struct SlotWord {
    std::vector<int> torus;
    std::vector<int> x;

    bool trivial() const;
    friend bool operator==(const SlotWord& a, const SlotWord& b) {
        return a.torus == b.torus && a.x == b.x;
    }
    friend bool operator<(const SlotWord& a, const SlotWord& b) {
        return a.torus != b.torus ? a.torus < b.torus : a.x < b.x;
    }
};

using Word = std::vector<SlotWord>;  // one SlotWord per slot

class AlgebraElement {
public:
    AlgebraElement() = default;  // unusable until assigned, for containers

    static AlgebraElement zero(SignaturePtr sig);
    static AlgebraElement one(SignaturePtr sig);
    static AlgebraElement scalar(SignaturePtr sig, LaurentPoly c);
    static AlgebraElement torus_gen(SignaturePtr sig, std::size_t slot, std::size_t m,
                                    int exp = 1);
    static AlgebraElement x_gen(SignaturePtr sig, std::size_t slot, std::size_t g = 0,
                                int pow = 1);
    // Arbitrary single term; validates shape and x >= 0.
    static AlgebraElement make(SignaturePtr sig, Word w, LaurentPoly c);

    const SignaturePtr& sig() const { return sig_; }
    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    bool operator==(const AlgebraElement& rhs) const;
    bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

    AlgebraElement scale(const LaurentPoly& c) const;
    // k >= 0 always works; k < 0 needs an invertible element (see inverse).
    AlgebraElement pow(long k) const;
    // Inverse of a single term with no X part and a unit-monomial
    // coefficient; everything else throws std::domain_error.
    AlgebraElement inverse() const;

    // Coefficient-level rewriting, applied termwise.
    AlgebraElement subst_coeff(std::string_view name, const LaurentPoly& replacement) const;
    AlgebraElement subst_coeff_poly(std::string_view name, const LaurentPoly& replacement) const;
    AlgebraElement div_coeff_exact(const LaurentPoly& divisor) const;

    // Slots where any term touches the torus or an X generator.
    std::vector<bool> support() const;

    nlohmann::json to_json() const;
    std::string str() const;

private:
    SignaturePtr sig_;
    std::map<Word, LaurentPoly> terms_;

    void require_sig() const;
    void require_same_sig(const AlgebraElement& rhs) const;
    void insert_term(Word w, LaurentPoly c);
};

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace qgauss
