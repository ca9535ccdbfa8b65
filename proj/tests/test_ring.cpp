#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgauss/ring.hpp"

using namespace qgauss;

namespace {

VarSetPtr qv() { return VarSet::make({"q", "v", "lambda"}); }

LaurentPoly var(const VarSetPtr& vs, const char* n, int e = 1) {
    return LaurentPoly::variable(vs, n, e);
}

// Small random elements for the algebraic property checks.  Deterministic
// seed so failures reproduce.
LaurentPoly random_poly(const VarSetPtr& vs, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-3, 3), coeffd(-5, 5);
    LaurentPoly p = LaurentPoly::zero(vs);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        ExpVec e(vs->size());
        for (auto& x : e) x = expd(rng);
        p = p + LaurentPoly::monomial(vs, std::move(e), coeffd(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("varset basics") {
    auto vs = qv();
    CHECK(vs->size() == 3);
    CHECK(vs->index("lambda") == 2);
    CHECK(vs->contains("v"));
    CHECK_FALSE(vs->contains("w"));
    CHECK_THROWS_AS(vs->index("w"), std::invalid_argument);
    CHECK_THROWS_AS(VarSet::make({"q", "q"}), std::invalid_argument);
}

TEST_CASE("constructors and canonical form") {
    auto vs = qv();
    auto q = var(vs, "q");
    CHECK(q.str() == "q");
    CHECK((q - q).is_zero());
    CHECK(LaurentPoly::constant(vs, 1).is_one());
    CHECK(LaurentPoly::constant(vs, 0).is_zero());
    // q + q collapses to one term
    CHECK((q + q).term_count() == 1);
    CHECK((q + q).coeff({1, 0, 0}) == 2);
    CHECK_THROWS_AS(LaurentPoly::monomial(vs, {1, 2}, 1), std::invalid_argument);
}

TEST_CASE("arithmetic matches hand expansion") {
    auto vs = qv();
    auto q = var(vs, "q");
    auto qi = var(vs, "q", -1);
    // (q - q^-1)(q + q^-1) = q^2 - q^-2
    auto lhs = (q - qi) * (q + qi);
    auto rhs = var(vs, "q", 2) - var(vs, "q", -2);
    CHECK(lhs == rhs);
    CHECK(lhs.str() == "q^2 - q^-2");
}

TEST_CASE("mismatched varsets are rejected") {
    auto a = LaurentPoly::variable(qv(), "q");
    auto b = LaurentPoly::variable(VarSet::make({"q", "v"}), "q");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    // equal contents on distinct pointers are fine
    auto c = LaurentPoly::variable(qv(), "q");
    CHECK(a == c);
}

TEST_CASE("powers, including negative monomial powers") {
    auto vs = qv();
    auto q = var(vs, "q");
    CHECK(q.pow(0).is_one());
    CHECK(q.pow(5) == var(vs, "q", 5));
    CHECK((q + q).pow(2) == LaurentPoly::monomial(vs, {2, 0, 0}, 4));
    CHECK(q.pow(-3) == var(vs, "q", -3));
    auto m = LaurentPoly::monomial(vs, {2, -1, 0}, -1);
    CHECK((m * m.inverse()).is_one());
    CHECK_THROWS_AS((q + q.pow(2)).pow(-1), std::domain_error);
    CHECK_THROWS_AS(LaurentPoly::constant(vs, 2).inverse(), std::domain_error);
}

TEST_CASE("substitute with a monomial replacement") {
    auto vs = VarSet::make({"k", "p", "q", "v"});
    auto k = var(vs, "k");
    auto p = var(vs, "p");
    auto q = var(vs, "q");
    // k - p*q*k^-1 under k -> v, p -> v^-1, q -> v^-1 gives v - v^-3
    auto expr = k - p * q * k.inverse();
    auto s = expr.substitute("k", var(vs, "v"))
                 .substitute("p", var(vs, "v", -1))
                 .substitute("q", var(vs, "v", -1));
    CHECK(s == var(vs, "v") - var(vs, "v", -3));
    // substituting a variable by itself is the identity
    CHECK(expr.substitute("p", p) == expr);
    // non-monomial replacement is rejected
    CHECK_THROWS_AS(expr.substitute("k", p + q), std::invalid_argument);
    // negative power of a non-unit coefficient cannot stay Laurent
    CHECK_THROWS_AS(k.inverse().substitute("k", LaurentPoly::constant(vs, 2) * var(vs, "v")),
                    std::domain_error);
}

TEST_CASE("substitute_poly expands a variable into a sum") {
    auto vs = qv();
    auto lam = var(vs, "lambda");
    auto q = var(vs, "q");
    auto lam_val = q - q.inverse();
    // lambda^2 -> q^2 - 2 + q^-2
    auto out = lam.pow(2).substitute_poly("lambda", lam_val);
    CHECK(out == q.pow(2) - LaurentPoly::constant(vs, 2) + q.pow(-2));
    // negative exponent of the substituted variable has no polynomial image
    CHECK_THROWS_AS(lam.inverse().substitute_poly("lambda", lam_val), std::domain_error);
}

TEST_CASE("derive_at_one") {
    auto vs = qv();
    auto v = var(vs, "v");
    // d/dh of v(h)^2 with v(0)=1, v'(0)=1/2 is 2*(1/2) = 1
    CHECK(v.pow(2).derive_at_one("v", Rat(1, 2)).is_one());
    // d/dh (v - v^-1) with slope 1/2: per-term halves add up to 1
    CHECK((v - v.inverse()).derive_at_one("v", Rat(1, 2)).is_one());
    // constants die
    CHECK(LaurentPoly::constant(vs, 7).derive_at_one("v", Rat(1, 2)).is_zero());
    // aggregated non-integral results are refused
    CHECK_THROWS_AS(v.derive_at_one("v", Rat(1, 2)), std::domain_error);
    // the residual monomial keeps the other variables
    auto p = var(vs, "q") * v.pow(2);
    CHECK(p.derive_at_one("v", Rat(1, 2)) == var(vs, "q"));
}

TEST_CASE("div_exact recovers factors") {
    auto vs = qv();
    auto q = var(vs, "q");
    auto lam = q - q.inverse();
    auto prod = lam.pow(3) * (q.pow(2) + LaurentPoly::constant(vs, 3));
    CHECK(prod.div_exact(lam.pow(3)) == q.pow(2) + LaurentPoly::constant(vs, 3));
    CHECK(prod.div_exact(q.pow(2) + LaurentPoly::constant(vs, 3)) == lam.pow(3));
    CHECK(LaurentPoly::zero(vs).div_exact(lam).is_zero());
    // 1 is not divisible by q - q^-1
    CHECK_THROWS_AS(LaurentPoly::constant(vs, 1).div_exact(lam), std::domain_error);
    // coefficient obstruction: q by 2q
    CHECK_THROWS_AS(q.div_exact(LaurentPoly::constant(vs, 2) * q), std::domain_error);
    CHECK_THROWS_AS(q.div_exact(LaurentPoly::zero(vs)), std::domain_error);
}

TEST_CASE("json round trip and pinned format") {
    auto vs = qv();
    auto p = var(vs, "q", 2) - LaurentPoly::constant(vs, 2) * var(vs, "lambda");
    auto j = p.to_json();
    CHECK(j.at("vars") == nlohmann::json({"q", "v", "lambda"}));
    // canonical order: ascending lexicographic exponent vectors
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("exp") == nlohmann::json({0, 0, 1}));
    CHECK(j.at("terms")[0].at("coeff") == "-2");
    CHECK(j.at("terms")[1].at("exp") == nlohmann::json({2, 0, 0}));
    CHECK(j.at("terms")[1].at("coeff") == "1");
    CHECK(LaurentPoly::from_json(j) == p);
    CHECK(LaurentPoly::from_json(j, vs) == p);
    CHECK_THROWS_AS(LaurentPoly::from_json(j, VarSet::make({"x"})), std::invalid_argument);
}

TEST_CASE("ring axioms on random elements") {
    auto vs = qv();
    std::mt19937 rng(20240817);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(vs, rng);
        auto b = random_poly(vs, rng);
        auto c = random_poly(vs, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly::constant(vs, 1) == a);
        // serialization is faithful
        CHECK(LaurentPoly::from_json(a.to_json(), vs) == a);
        // exact division undoes multiplication
        if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
    }
}

TEST_CASE("derivative rules on random elements") {
    auto vs = qv();
    std::mt19937 rng(987654);
    const Rat slope(1, 3);
    auto eval1 = [&](const LaurentPoly& p) {
        return p.substitute("v", LaurentPoly::constant(vs, 1));
    };
    for (int it = 0; it < 100; ++it) {
        // exponents of v kept multiples of 3 so slope 1/3 stays integral
        auto cook = [&](LaurentPoly p) {
            return p.substitute("v", LaurentPoly::variable(vs, "v", 3));
        };
        auto a = cook(random_poly(vs, rng));
        auto b = cook(random_poly(vs, rng));
        auto da = a.derive_at_one("v", slope);
        auto db = b.derive_at_one("v", slope);
        // linearity
        CHECK((a + b).derive_at_one("v", slope) == da + db);
        // product rule at the evaluation point
        CHECK((a * b).derive_at_one("v", slope) == da * eval1(b) + eval1(a) * db);
    }
}

TEST_CASE("parse_monomial accepts CLI binding syntax") {
    auto vs = qv();
    CHECK(parse_monomial(vs, "q^-1*lambda") ==
          var(vs, "q", -1) * var(vs, "lambda"));
    CHECK(parse_monomial(vs, "-q*lambda") == -(var(vs, "q") * var(vs, "lambda")));
    CHECK(parse_monomial(vs, "1") == LaurentPoly::constant(vs, 1));
    CHECK(parse_monomial(vs, " 3*v^2 ") == LaurentPoly::monomial(vs, {0, 2, 0}, 3));
    CHECK(parse_monomial(vs, "v^2*v^-1") == var(vs, "v"));
    CHECK_THROWS_AS(parse_monomial(vs, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(vs, "w"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(vs, "q^x"), std::invalid_argument);
}

TEST_CASE("rational rendering") {
    CHECK(rat_str(Rat(2, 3)) == "2/3");
    CHECK(rat_str(Rat(-1, 2)) == "-1/2");
    CHECK(rat_str(Rat(4)) == "4");
}
