#pragma once

// Exact coefficient arithmetic for the whole engine: multivariate Laurent
// polynomials with arbitrary-precision integer coefficients over a fixed,
// ordered set of variable names.  Terms are kept in a std::map keyed by
// exponent vector, so the lexicographic order on exponent vectors doubles as
// the canonical term order used by serialization and by the leading-term
// division inside div_exact.  Every value is immutable once built; all
// operations return fresh objects.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace qgauss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Immutable ordered list of variable names.  Ring elements share a VarSet by
// pointer; binary operations insist the contents agree (pointer identity is
// not required, two sets with equal name lists are interchangeable).
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(std::string_view name) const;
    // Position of a name; throws std::invalid_argument for unknown names.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// One exponent per variable, in VarSet order.  Negative entries are legal
// everywhere: this is a ring of Laurent polynomials.
using ExpVec = std::vector<int>;

class LaurentPoly {
public:
    // Default-constructed elements carry no VarSet and may only be assigned
    // to.  Containers need this; every factory below returns a usable value.
    LaurentPoly() = default;

    static LaurentPoly zero(VarSetPtr vars);
    static LaurentPoly constant(VarSetPtr vars, Int c);
    static LaurentPoly variable(VarSetPtr vars, std::string_view name, int exp = 1);
    static LaurentPoly monomial(VarSetPtr vars, ExpVec exps, Int coeff);

    const VarSetPtr& vars() const { return vars_; }
    const std::map<ExpVec, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Value of a constant polynomial (zero counts); throws std::domain_error
    // for anything with a variable in it.
    Int constant_value() const;
    // Coefficient of one exponent vector, zero if the term is absent.
    Int coeff(const ExpVec& exps) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    // k >= 0 works for anything; k < 0 only for single-term elements with
    // coefficient +-1 (the invertible monomials).  Throws std::domain_error
    // otherwise.
    LaurentPoly pow(long k) const;
    // Multiplicative inverse of an invertible monomial.
    LaurentPoly inverse() const;

    // Replace a variable by a single-term element (over the same VarSet).
    // Negative occurrences of the variable are fine because monomials invert;
    // a non-monomial replacement throws std::invalid_argument.
    LaurentPoly substitute(std::string_view name, const LaurentPoly& replacement) const;

    // Replace a variable by an arbitrary element.  Requires every term of
    // *this to carry a non-negative exponent of the variable, since general
    // polynomials have no Laurent inverse.
    LaurentPoly substitute_poly(std::string_view name, const LaurentPoly& replacement) const;

    // d/dh at h = 0 of the composite t |-> p(x(h)) where x(0) = 1 and
    // x'(0) = slope: sends each x^k to k * slope with x erased from the term.
    // The slope is an exact rational; the aggregated coefficient of every
    // surviving monomial must come out integral or std::domain_error is
    // thrown (the integrality always holds for the chain-rule slopes used by
    // the classical-limit code, where exponents are multiples of the root
    // degree).
    LaurentPoly derive_at_one(std::string_view name, const Rat& slope) const;

    // Exact division: returns q with *this == q * divisor, throwing
    // std::domain_error when no such q exists.  Long division on lexicographic
    // leading terms; exactness bounds the number of steps by the term count
    // of the quotient.
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    // {"vars": [names...], "terms": [{"exp": [ints...], "coeff": "decimal"}]}
    // with terms in canonical (ascending lexicographic) order.
    nlohmann::json to_json() const;
    // Inverse of to_json.  When vars is non-null the names in the document
    // must match it and the shared pointer is reused.
    static LaurentPoly from_json(const nlohmann::json& j, VarSetPtr vars = nullptr);

    // Human-readable form, highest term first: "q^2 - 2*q^-1*lambda + 3".
    std::string str() const;

private:
    VarSetPtr vars_;
    std::map<ExpVec, Int> terms_;

    void require_vars() const;
    void require_same_vars(const LaurentPoly& rhs) const;
    void insert_term(ExpVec exps, Int c);
};

// Parse a signed monomial like "q^-1*lambda", "-q*lambda", "3*v^2" or "1"
// over the given variables.  This is the syntax accepted for parameter
// bindings on the command line.
LaurentPoly parse_monomial(const VarSetPtr& vars, std::string_view text);

// Exact rational as a JSON-friendly string ("2/3", "-1/2", "4").
std::string rat_str(const Rat& r);

}  // namespace qgauss
