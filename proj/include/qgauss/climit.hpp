#pragma once

// The h = 0 fiber of the quantum algebra: every torus generator K_m = q^(H_m)
// degenerates to 1, and what survives of the derivative are enveloping-algebra
// words in the Cartan elements H_m and the slot's X generators, with honest
// commutators [H_m, X_g] = c X_g instead of q-power crossings.  Coefficients
// are exact rationals.  This is where the classical-limit matrix lives and
// where its commutation relations are checked.

#include "qgauss/ring.hpp"
#include "qgauss/slotalg.hpp"

namespace qgauss {

struct ClSlotSpec {
    std::string name;
    std::vector<std::string> hgen;  // Cartan generator names
    std::vector<std::string> xgen;
    // shift[g][m]: integer c with [H_m, X_g] = c X_g in this slot.
    std::vector<std::vector<int>> shift;
};

class ClSignature {
public:
    explicit ClSignature(std::vector<ClSlotSpec> slots);
    static std::shared_ptr<const ClSignature> make(std::vector<ClSlotSpec> slots);

    std::size_t slot_count() const { return slots_.size(); }
    const ClSlotSpec& slot(std::size_t s) const { return slots_.at(s); }

    bool operator==(const ClSignature& rhs) const;
    bool operator!=(const ClSignature& rhs) const { return !(*this == rhs); }

    nlohmann::json to_json() const;

private:
    std::vector<ClSlotSpec> slots_;
};

using ClSigPtr = std::shared_ptr<const ClSignature>;

// Classical shadow of a quantum signature: each commutation monomial q^c
// contributes the integer c to the shift table, and the torus names K... are
// renamed to H~... .  A commutation scalar that is not a plain power of q has
// no h = 0 limit in this sense and is rejected.
ClSigPtr classical_signature(const SignaturePtr& sig, const std::string& qname = "q");

// Normal word per slot: H-monomial first, X-powers second, both >= 0.
struct ClSlotWord {
    std::vector<int> h;
    std::vector<int> x;

    bool trivial() const;
    friend bool operator==(const ClSlotWord& a, const ClSlotWord& b) {
        return a.h == b.h && a.x == b.x;
    }
    friend bool operator<(const ClSlotWord& a, const ClSlotWord& b) {
        return a.h != b.h ? a.h < b.h : a.x < b.x;
    }
};

using ClWord = std::vector<ClSlotWord>;

class ClElement {
public:
    ClElement() = default;

    static ClElement zero(ClSigPtr sig);
    static ClElement one(ClSigPtr sig);
    static ClElement scalar(ClSigPtr sig, Rat c);
    static ClElement h_gen(ClSigPtr sig, std::size_t slot, std::size_t m);
    static ClElement x_gen(ClSigPtr sig, std::size_t slot, std::size_t g);
    static ClElement make(ClSigPtr sig, ClWord w, Rat c);

    const ClSigPtr& sig() const { return sig_; }
    const std::map<ClWord, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ClElement operator-() const;
    ClElement operator+(const ClElement& rhs) const;
    ClElement operator-(const ClElement& rhs) const;
    // Normal ordering: moving X^r past H_m^a expands (H_m - r c)^a by the
    // binomial theorem, one slot at a time.
    ClElement operator*(const ClElement& rhs) const;
    bool operator==(const ClElement& rhs) const;
    bool operator!=(const ClElement& rhs) const { return !(*this == rhs); }

    ClElement scale(const Rat& c) const;

    nlohmann::json to_json() const;
    std::string str() const;

private:
    ClSigPtr sig_;
    std::map<ClWord, Rat> terms_;

    void require_sig() const;
    void require_same_sig(const ClElement& rhs) const;
    void insert_term(ClWord w, Rat c);
};

ClElement commutator(const ClElement& a, const ClElement& b);

// Plain container for the classical-limit matrix; the interesting algebra
// happens entrywise.
class ClMatrix {
public:
    ClMatrix(ClSigPtr sig, std::size_t rows, std::size_t cols);

    const ClSigPtr& sig() const { return sig_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    ClElement& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const ClElement& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    bool operator==(const ClMatrix& rhs) const;
    bool operator!=(const ClMatrix& rhs) const { return !(*this == rhs); }

    nlohmann::json to_json() const;

private:
    ClSigPtr sig_;
    std::size_t rows_, cols_;
    std::vector<ClElement> a_;
};

}  // namespace qgauss
