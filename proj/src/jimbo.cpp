#include "qgauss/jimbo.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgauss {
namespace {

// Torus exponent vector of K_i^power over K_1 .. K_{n-1}; K_n is the inverse
// of the product of the others.
std::vector<int> kexp(int n, int i, int power) {
    std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
    if (i < n) {
        e[static_cast<std::size_t>(i - 1)] = power;
    } else {
        for (auto& c : e) c = -power;
    }
    return e;
}

Word empty_word(const SignaturePtr& sig) {
    Word w(sig->slot_count());
    for (std::size_t s = 0; s < sig->slot_count(); ++s) {
        w[s].torus.assign(sig->slot(s).torus.size(), 0);
        w[s].x.assign(sig->slot(s).xgen.size(), 0);
    }
    return w;
}

LaurentPoly qpow(const VarSetPtr& vars, int e) {
    ExpVec exps(vars->size(), 0);
    exps[vars->index("q")] = e;
    return LaurentPoly::monomial(vars, std::move(exps), 1);
}

void require_model_triple(const SlModel& m, const GaussTriple& t, const char* where) {
    if (t.n != m.n || !t.sig || *t.sig != *m.sig)
        throw std::invalid_argument(std::string(where) + ": triple does not match the model");
    if (t.tminus.rows() != static_cast<std::size_t>(m.n) ||
        t.tminus.cols() != static_cast<std::size_t>(m.n) ||
        t.tplus.rows() != static_cast<std::size_t>(m.n) ||
        t.tplus.cols() != static_cast<std::size_t>(m.n))
        throw std::invalid_argument(std::string(where) + ": factor dimensions are not n x n");
}

}  // namespace

LaurentPoly SlModel::fvar(int i) const {
    return LaurentPoly::variable(sig->vars(), "f" + std::to_string(i));
}

LaurentPoly SlModel::gvar(int i) const {
    return LaurentPoly::variable(sig->vars(), "g" + std::to_string(i));
}

SlModel sl_model(int n) {
    if (n < 2) throw std::invalid_argument("sl_model: n must be at least 2");

    SlModel m;
    m.n = n;
    m.chev = build_chevalley(n);

    std::vector<std::string> names = {"q", "v", "lambda"};
    for (int i = 1; i < n; ++i) names.push_back("f" + std::to_string(i));
    for (int i = 1; i < n; ++i) names.push_back("g" + std::to_string(i));
    auto vars = VarSet::make(std::move(names));

    std::vector<std::string> torus;
    for (int i = 1; i < n; ++i) torus.push_back("K" + std::to_string(i));

    std::vector<SlotSpec> slots;
    for (int sign : {-1, +1}) {
        for (int i = 1; i < n; ++i) {
            SlotSpec s;
            s.name = (sign < 0 ? "U-" : "U+") + std::to_string(i);
            s.torus = torus;
            s.xgen = {"X" + std::to_string(i) + (sign < 0 ? "-" : "+")};
            s.comm.resize(1);
            for (int mm = 1; mm < n; ++mm)
                s.comm[0].push_back(qpow(vars, sign * m.chev.ad_plus(mm - 1, i - 1)));
            slots.push_back(std::move(s));
        }
    }
    m.sig = AlgebraSignature::make(vars, std::move(slots));
    return m;
}

GaussTriple delta_generators(const SlModel& m) {
    const int n = m.n;
    GaussTriple t{n, m.sig, OpMatrix(m.sig, n, n), OpMatrix(m.sig, n, n)};
    const auto one = LaurentPoly::constant(m.sig->vars(), 1);

    for (int i = 1; i <= n; ++i) {
        // t^(+-)_ii = (K_i^(+-1)) on every leg of the matching factor.
        Word wp = empty_word(m.sig), wm = empty_word(m.sig);
        for (int l = 1; l < n; ++l) {
            wp[m.plus_slot(l)].torus = kexp(n, i, +1);
            wm[m.minus_slot(l)].torus = kexp(n, i, -1);
        }
        t.tplus.at(i - 1, i - 1) = AlgebraElement::make(m.sig, std::move(wp), one);
        t.tminus.at(i - 1, i - 1) = AlgebraElement::make(m.sig, std::move(wm), one);
    }
    for (int i = 1; i < n; ++i) {
        // Raising image f_i K_i x ... x K_i x X_i^(+) x K_{i+1} x ... and its
        // lowering mirror with g_i and inverted torus legs.
        Word wp = empty_word(m.sig), wm = empty_word(m.sig);
        for (int l = 1; l < i; ++l) {
            wp[m.plus_slot(l)].torus = kexp(n, i, +1);
            wm[m.minus_slot(l)].torus = kexp(n, i, -1);
        }
        wp[m.plus_slot(i)].x[0] = 1;
        wm[m.minus_slot(i)].x[0] = 1;
        for (int l = i + 1; l < n; ++l) {
            wp[m.plus_slot(l)].torus = kexp(n, i + 1, +1);
            wm[m.minus_slot(l)].torus = kexp(n, i + 1, -1);
        }
        t.tplus.at(i - 1, i) = AlgebraElement::make(m.sig, std::move(wp), m.fvar(i));
        t.tminus.at(i, i - 1) = AlgebraElement::make(m.sig, std::move(wm), m.gvar(i));
    }
    return t;
}

GaussTriple closed_form(const SlModel& m) {
    const int n = m.n;
    GaussTriple t = delta_generators(m);

    // Depth-k entries: product of the k consecutive parameters, a leading
    // block of K_i legs, the run X_i ... X_{j-1}, and a trailing block of K_j
    // legs (j = i + k, so the leg count comes out at n - 1).
    for (int k = 2; k < n; ++k) {
        for (int i = 1; i + k <= n; ++i) {
            const int j = i + k;
            Word wp = empty_word(m.sig), wm = empty_word(m.sig);
            LaurentPoly fs = LaurentPoly::constant(m.sig->vars(), 1);
            LaurentPoly gs = fs;
            for (int l = 1; l < i; ++l) {
                wp[m.plus_slot(l)].torus = kexp(n, i, +1);
                wm[m.minus_slot(l)].torus = kexp(n, i, -1);
            }
            for (int l = i; l < j; ++l) {
                wp[m.plus_slot(l)].x[0] = 1;
                wm[m.minus_slot(l)].x[0] = 1;
                fs = fs * m.fvar(l);
                gs = gs * m.gvar(l);
            }
            for (int l = j; l < n; ++l) {
                wp[m.plus_slot(l)].torus = kexp(n, j, +1);
                wm[m.minus_slot(l)].torus = kexp(n, j, -1);
            }
            t.tplus.at(i - 1, j - 1) = AlgebraElement::make(m.sig, std::move(wp), std::move(fs));
            t.tminus.at(j - 1, i - 1) = AlgebraElement::make(m.sig, std::move(wm), std::move(gs));
        }
    }
    return t;
}

GaussTriple ladder_reconstruct(const SlModel& m, const GaussTriple& seed,
                               const LaurentPoly& lambda_binding) {
    require_model_triple(m, seed, "ladder_reconstruct");
    if (!lambda_binding.vars() || *lambda_binding.vars() != *m.sig->vars())
        throw std::invalid_argument("ladder_reconstruct: binding is over the wrong variables");
    if (lambda_binding.is_zero())
        throw std::invalid_argument("ladder_reconstruct: binding must be nonzero");

    const int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool deep = j > i + 1 || i > j + 1;
            if (deep && (!seed.tplus.at(i, j).is_zero() || !seed.tminus.at(i, j).is_zero()))
                throw std::invalid_argument(
                    "ladder_reconstruct: seed must vanish beyond the first off-diagonal");
        }

    GaussTriple t = seed;
    for (int k = 2; k < n; ++k) {
        const LaurentPoly denom = lambda_binding.pow(k - 1);
        for (int i = 1; i + k <= n; ++i) {
            const int j = i + k;
            // Nested commutators eat the chain from the right; the diagonal
            // inverses sit on the left; each depth costs one power of lambda.
            AlgebraElement up = t.tplus.at(j - 2, j - 1);
            AlgebraElement lo = t.tminus.at(j - 1, j - 2);
            for (int l = j - 2; l >= i; --l) {
                up = commutator(t.tplus.at(l - 1, l), up);
                lo = commutator(t.tminus.at(l, l - 1), lo);
            }
            AlgebraElement pref_up = AlgebraElement::one(m.sig);
            AlgebraElement pref_lo = pref_up;
            for (int l = 1; l < k; ++l) {
                pref_up = pref_up * t.tplus.at(i + l - 1, i + l - 1).inverse();
                pref_lo = pref_lo * t.tminus.at(i + l - 1, i + l - 1).inverse();
            }
            t.tplus.at(i - 1, j - 1) = (pref_up * up).div_coeff_exact(denom);
            t.tminus.at(j - 1, i - 1) = (pref_lo * lo).div_coeff_exact(denom);
        }
    }
    return t;
}

OpMatrix assemble_T(const GaussTriple& t) { return gauss_product(t.tminus, t.tplus); }

GaussFactors identified_factors(const GaussTriple& t) {
    const std::size_t n = t.tminus.rows();
    OpMatrix t_d(t.sig, n, n), dminus_inv(t.sig, n, n), dplus_inv(t.sig, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t_d.at(i, i) = t.tminus.at(i, i) * t.tplus.at(i, i);
        dminus_inv.at(i, i) = t.tminus.at(i, i).inverse();
        dplus_inv.at(i, i) = t.tplus.at(i, i).inverse();
    }
    GaussFactors f{t.tminus * dminus_inv, t_d, dplus_inv * t.tplus,
                   OpMatrix(t.sig, n, n), OpMatrix(t.sig, n, n)};
    f.t_minus = f.t_l * f.t_d;
    f.t_plus = f.t_d * f.t_u;
    return f;
}

GaussTriple perturb_entry(const GaussTriple& t, std::size_t i, std::size_t j) {
    if (i >= t.tminus.rows() || j >= t.tminus.cols())
        throw std::invalid_argument("perturb_entry: index out of range");
    GaussTriple out = t;
    const auto q = LaurentPoly::variable(t.sig->vars(), "q");
    auto& entry = j >= i ? out.tplus.at(i, j) : out.tminus.at(i, j);
    if (entry.is_zero())
        throw std::invalid_argument("perturb_entry: targeted entry is zero");
    entry = entry.scale(q);
    return out;
}

GlpqModel build_glpq2() {
    auto vars = VarSet::make({"k", "p", "q", "v", "cplus", "cminus"});
    auto mono = [&](int ke, int pe, int qe) {
        ExpVec e(vars->size(), 0);
        e[0] = ke;
        e[1] = pe;
        e[2] = qe;
        return LaurentPoly::monomial(vars, std::move(e), 1);
    };

    // Torus generators per slot: G1 = (k/p)^(H/2), G2 = (k/q)^(H/2), so
    // crossing X^+ costs k/p resp. k/q and X^- the inverses.
    SlotSpec lower{"U-", {"G1", "G2"}, {"Xm"}, {{mono(-1, 1, 0), mono(-1, 0, 1)}}};
    SlotSpec upper{"U+", {"G1", "G2"}, {"Xp"}, {{mono(1, -1, 0), mono(1, 0, -1)}}};
    auto sig = AlgebraSignature::make(vars, {lower, upper});

    GlpqModel g{sig, rpq(vars), OpMatrix(sig, 2, 2), OpMatrix(sig, 2, 2),
                OpMatrix(sig, 2, 2)};
    const auto cplus = LaurentPoly::variable(vars, "cplus");
    const auto cminus = LaurentPoly::variable(vars, "cminus");

    g.tminus.at(0, 0) = AlgebraElement::torus_gen(sig, 0, 0, -1);
    g.tminus.at(1, 0) = AlgebraElement::x_gen(sig, 0).scale(cminus);
    g.tminus.at(1, 1) = AlgebraElement::torus_gen(sig, 0, 1, +1);

    g.tplus.at(0, 0) = AlgebraElement::torus_gen(sig, 1, 1, +1);
    g.tplus.at(0, 1) = AlgebraElement::x_gen(sig, 1).scale(cplus);
    g.tplus.at(1, 1) = AlgebraElement::torus_gen(sig, 1, 0, -1);

    g.t = gauss_product(g.tminus, g.tplus);
    return g;
}

DualSl2Model build_dual_sl2() {
    auto vars = VarSet::make({"q", "cplus", "cminus"});
    const auto q = LaurentPoly::variable(vars, "q");

    // One slot: torus W = q^H~ scales both X~ generators by q, and the X~
    // generators commute with each other.
    SlotSpec slot{"D", {"W"}, {"Xp", "Xm"}, {{q}, {q}}};
    auto sig = AlgebraSignature::make(vars, {slot});

    DualSl2Model d{sig, OpMatrix::identity(sig, 2), OpMatrix::identity(sig, 2),
                   OpMatrix::identity(sig, 2), OpMatrix(sig, 2, 2)};
    d.t_l.at(1, 0) = AlgebraElement::x_gen(sig, 0, 1).scale(LaurentPoly::variable(vars, "cminus"));
    d.t_d.at(0, 0) = AlgebraElement::torus_gen(sig, 0, 0, +1);
    d.t_d.at(1, 1) = AlgebraElement::torus_gen(sig, 0, 0, -1);
    d.t_u.at(0, 1) = AlgebraElement::x_gen(sig, 0, 0).scale(LaurentPoly::variable(vars, "cplus"));

    // All three factors share the slot, so this is an honest noncommutative
    // product, not a Gauss product of disjoint factors.
    d.t = d.t_l * d.t_d * d.t_u;
    return d;
}

}  // namespace qgauss
