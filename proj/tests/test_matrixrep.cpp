#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgauss/matrixrep.hpp"

using namespace qgauss;

namespace {

AlgebraElement rand_elem(const SignaturePtr& sig, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), texp(-2, 2), xpow(0, 2), coeff(-3, 3),
        qexp(-2, 2);
    AlgebraElement e = AlgebraElement::zero(sig);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Word w(sig->slot_count());
        for (std::size_t s = 0; s < w.size(); ++s) {
            w[s].torus.resize(sig->slot(s).torus.size());
            for (auto& a : w[s].torus) a = texp(rng);
            w[s].x.resize(sig->slot(s).xgen.size());
            for (auto& p : w[s].x) p = xpow(rng);
        }
        ExpVec exps(sig->vars()->size(), 0);
        exps[0] = qexp(rng);
        auto c = LaurentPoly::monomial(sig->vars(), std::move(exps), coeff(rng));
        e = e + AlgebraElement::make(sig, std::move(w), std::move(c));
    }
    return e;
}

// The published table in the root variable, q = v^2.
PolyMatrix table_entry(const VarSetPtr& vars, int which) {
    auto v = [&](int e) { return LaurentPoly::variable(vars, "v", e); };
    auto one = LaurentPoly::constant(vars, 1);
    PolyMatrix m(vars, 4, 4);
    switch (which) {
        case 11:
            m.at(0, 0) = one;
            m.at(1, 1) = v(2);
            m.at(2, 2) = v(-2);
            m.at(3, 3) = one;
            break;
        case 12:
            m.at(0, 2) = one;
            m.at(1, 3) = v(2);
            break;
        case 21:
            m.at(1, 0) = one;
            m.at(3, 2) = v(-2);
            break;
        case 22:
            m.at(0, 0) = one;
            m.at(1, 1) = v(-2);
            m.at(2, 2) = v(2);
            m.at(3, 3) = one;
            m.at(1, 2) = one;
            break;
    }
    return m;
}

LimitBindings section5_bindings(const VarSetPtr& vars) {
    auto q = LaurentPoly::variable(vars, "q");
    auto lam = LaurentPoly::variable(vars, "lambda");
    return {q.inverse() * lam, -(q * lam), q - q.inverse()};
}

}  // namespace

TEST_CASE("representation table reproduces bit-exactly") {
    auto s5 = reproduce_section5();
    auto vars = s5.t11.grid.vars();

    CHECK(s5.t11.grid == table_entry(vars, 11));
    CHECK(s5.t12.grid == table_entry(vars, 12));
    CHECK(s5.t21.grid == table_entry(vars, 21));
    CHECK(s5.t22.grid == table_entry(vars, 22));

    CHECK(s5.calibration.at("order") == "last_slowest");
    CHECK(s5.calibration.at("f") == "v");
    CHECK(s5.calibration.at("g") == "v^-1");
    CHECK(s5.calibration.at("q") == "v^2");
}

TEST_CASE("the unreversed Kronecker order does not match the table") {
    auto m = sl_model(2);
    auto rep = fundamental_rep(2, m.sig->vars());
    auto T = assemble_T(closed_form(m));
    RepContext ctx{sl_slot_reps(m, rep), KronOrder::first_slowest, "q", "v", 2};
    auto t11 = evaluate_in_rep(T.at(0, 0), ctx);
    CHECK(t11.grid != table_entry(m.sig->vars(), 11));
}

TEST_CASE("evaluation is an algebra homomorphism") {
    auto m = sl_model(2);
    auto rep = fundamental_rep(2, m.sig->vars());
    RepContext ctx{sl_slot_reps(m, rep), KronOrder::last_slowest, "q", "v", 2};

    CHECK(evaluate_in_rep(AlgebraElement::one(m.sig), ctx).grid ==
          PolyMatrix::identity(m.sig->vars(), 4));

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = rand_elem(m.sig, rng);
        auto b = rand_elem(m.sig, rng);
        CHECK(evaluate_in_rep(a * b, ctx).grid ==
              evaluate_in_rep(a, ctx).grid * evaluate_in_rep(b, ctx).grid);
    }
}

TEST_CASE("evaluated table satisfies RTT, symbolically and at v = 2") {
    auto s5 = reproduce_section5();
    auto vars = s5.t11.grid.vars();
    auto vsq = LaurentPoly::variable(vars, "v", 2);
    auto rgrid = standard_r(vars, 2).grid.map(
        [&](const LaurentPoly& e) { return e.substitute("q", vsq); });

    std::vector<std::vector<PolyMatrix>> blocks = {{s5.t11.grid, s5.t12.grid},
                                                   {s5.t21.grid, s5.t22.grid}};
    CHECK(block_rtt_residual(rgrid, blocks).is_zero());

    // Rational spot check away from roots of unity: evaluate v = 2 into
    // exact rationals and redo the residual with RatMatrix blocks.
    const std::size_t vidx = vars->index("v");
    auto rat_at2 = [&](const LaurentPoly& e) {
        Rat sum = 0;
        for (const auto& [exps, c] : e.terms()) {
            Rat m = c;
            for (int k = 0; k < exps[vidx]; ++k) m *= 2;
            for (int k = 0; k > exps[vidx]; --k) m /= 2;
            sum += m;
        }
        return sum;
    };
    auto rmat_at2 = [&](const PolyMatrix& p) {
        RatMatrix r(p.rows(), p.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) r.at(i, j) = rat_at2(p.at(i, j));
        return r;
    };
    std::vector<std::vector<RatMatrix>> nt = {{rmat_at2(s5.t11.grid), rmat_at2(s5.t12.grid)},
                                              {rmat_at2(s5.t21.grid), rmat_at2(s5.t22.grid)}};
    RatMatrix nr = rmat_at2(rgrid);
    bool numeric_zero = true;
    for (std::size_t i = 0; i < 2 && numeric_zero; ++i)
        for (std::size_t k = 0; k < 2 && numeric_zero; ++k)
            for (std::size_t j = 0; j < 2 && numeric_zero; ++j)
                for (std::size_t l = 0; l < 2 && numeric_zero; ++l) {
                    RatMatrix blk(4, 4);
                    for (std::size_t a = 0; a < 2; ++a)
                        for (std::size_t b = 0; b < 2; ++b) {
                            blk = blk + (nt[a][j] * nt[b][l]).scaled(nr.at(i * 2 + k, a * 2 + b));
                            blk = blk - (nt[k][b] * nt[i][a]).scaled(nr.at(a * 2 + b, j * 2 + l));
                        }
                    numeric_zero = blk.is_zero();
                }
    CHECK(numeric_zero);
}

TEST_CASE("evaluation needs the root variable") {
    auto vars = VarSet::make({"q"});
    auto q = LaurentPoly::variable(vars, "q");
    auto sig = AlgebraSignature::make(vars, {SlotSpec{"S", {"K"}, {"X"}, {{q}}}});
    RepContext ctx{{SlotRep{2, {{q, q.inverse()}}, {PolyMatrix(vars, 2, 2)}}},
                   KronOrder::first_slowest,
                   "q",
                   "v",
                   2};
    CHECK_THROWS_AS(evaluate_in_rep(AlgebraElement::one(sig), ctx), std::domain_error);
}

TEST_CASE("classical limit gives the published M matrix") {
    auto m = sl_model(2);
    auto T = assemble_T(closed_form(m));
    auto M = classical_limit(m, T, section5_bindings(m.sig->vars()));
    auto csig = M.sig();

    // M = [[1 (x) H~ - H~ (x) 1, 2 (1 (x) X+)], [-2 (X- (x) 1), -(...)]]
    auto m11 = ClElement::h_gen(csig, 1, 0) - ClElement::h_gen(csig, 0, 0);
    CHECK(M.at(0, 0) == m11);
    CHECK(M.at(0, 1) == ClElement::x_gen(csig, 1, 0).scale(2));
    CHECK(M.at(1, 0) == ClElement::x_gen(csig, 0, 0).scale(-2));
    CHECK(M.at(1, 1) == -m11);
}

TEST_CASE("M entries satisfy the dual algebra relations") {
    auto m = sl_model(2);
    auto T = assemble_T(closed_form(m));
    auto M = classical_limit(m, T, section5_bindings(m.sig->vars()));

    CHECK(commutator(M.at(0, 0), M.at(0, 1)) == M.at(0, 1));
    CHECK(commutator(M.at(0, 0), M.at(1, 0)) == M.at(1, 0));
    CHECK(commutator(M.at(0, 1), M.at(1, 0)).is_zero());
}

TEST_CASE("classical limit annihilates v-constant entries") {
    auto m = sl_model(2);
    auto M = classical_limit(m, OpMatrix::identity(m.sig, 2), section5_bindings(m.sig->vars()));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(M.at(i, j).is_zero());
}

TEST_CASE("classical limit rejects circular bindings") {
    auto m = sl_model(2);
    auto T = assemble_T(closed_form(m));
    auto vars = m.sig->vars();
    auto b = section5_bindings(vars);

    auto circular = b;
    circular.lambda = LaurentPoly::variable(vars, "lambda");
    CHECK_THROWS_AS(classical_limit(m, T, circular), std::invalid_argument);

    auto undone = b;
    undone.f = LaurentPoly::variable(vars, "f1");
    CHECK_THROWS_AS(classical_limit(m, T, undone), std::invalid_argument);
}

TEST_CASE("classical signature requires pure q-power crossings") {
    CHECK_THROWS_AS(classical_signature(build_glpq2().sig), std::domain_error);
    CHECK_NOTHROW(classical_signature(build_dual_sl2().sig));
}

TEST_CASE("classical normal ordering expands binomially") {
    auto csig = classical_signature(sl_model(2).sig);
    auto H = ClElement::h_gen(csig, 1, 0);   // H~ in the raising slot
    auto X = ClElement::x_gen(csig, 1, 0);   // [H~, X+] = X+
    auto one = ClElement::one(csig);

    CHECK(commutator(H, X) == X);
    CHECK(X * H == (H - one) * X);
    CHECK(X * H * H == (H - one) * (H - one) * X);

    // lowering slot has the opposite shift
    auto Hm = ClElement::h_gen(csig, 0, 0);
    auto Xm = ClElement::x_gen(csig, 0, 0);
    CHECK(commutator(Hm, Xm) == -Xm);
}
