#include "qgauss/matrixrep.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgauss {
namespace {

PolyMatrix to_poly(const RatMatrix& a, const VarSetPtr& vars) {
    PolyMatrix r(vars, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& x = a.at(i, j);
            if (boost::multiprecision::denominator(x) != 1)
                throw std::logic_error("matrixrep: generator matrix is not integral");
            r.at(i, j) = LaurentPoly::constant(vars, boost::multiprecision::numerator(x));
        }
    return r;
}

const char* order_name(KronOrder o) {
    return o == KronOrder::first_slowest ? "first_slowest" : "last_slowest";
}

}  // namespace

nlohmann::json RepMatrix::to_json() const {
    return {{"dim", dim}, {"order", order_name(order)}, {"grid", grid.to_json()}};
}

std::vector<SlotRep> sl_slot_reps(const SlModel& m, const FundamentalRep& rep) {
    if (rep.n != m.n) throw std::invalid_argument("sl_slot_reps: representation has the wrong n");
    if (!rep.vars || *rep.vars != *m.sig->vars())
        throw std::invalid_argument("sl_slot_reps: representation is over the wrong variables");

    std::vector<SlotRep> out;
    for (std::size_t s = 0; s < m.sig->slot_count(); ++s) {
        SlotRep sr;
        sr.dim = static_cast<std::size_t>(m.n);
        sr.torus_diag = rep.kdiag;
        sr.torus_diag.pop_back();  // K_n is determined by the others, not a slot generator
        const bool minus = s < static_cast<std::size_t>(m.n - 1);
        const std::size_t root = minus ? s : s - static_cast<std::size_t>(m.n - 1);
        sr.xmat.push_back(to_poly(minus ? rep.xm.at(root) : rep.xp.at(root), rep.vars));
        out.push_back(std::move(sr));
    }
    return out;
}

RepMatrix evaluate_in_rep(const AlgebraElement& x, const RepContext& ctx) {
    const SignaturePtr& sig = x.sig();
    if (!sig) throw std::invalid_argument("evaluate_in_rep: unset element");
    if (ctx.slots.size() != sig->slot_count())
        throw std::invalid_argument("evaluate_in_rep: slot representation count mismatch");
    const VarSetPtr& vars = sig->vars();
    if (!vars->contains(ctx.vname))
        throw std::domain_error("evaluate_in_rep: root variable " + ctx.vname +
                                " is not adjoined to the coefficient ring");

    std::size_t dim = 1;
    for (const auto& sr : ctx.slots) dim *= sr.dim;
    const auto vpow = LaurentPoly::variable(vars, ctx.vname, ctx.degree);

    PolyMatrix acc(vars, dim, dim);
    for (const auto& [w, c] : x.terms()) {
        std::vector<PolyMatrix> fac;
        for (std::size_t s = 0; s < ctx.slots.size(); ++s) {
            const SlotRep& sr = ctx.slots[s];
            if (sr.torus_diag.size() != w[s].torus.size() || sr.xmat.size() != w[s].x.size())
                throw std::invalid_argument("evaluate_in_rep: slot shape mismatch");
            PolyMatrix mat(vars, sr.dim, sr.dim);
            for (std::size_t d = 0; d < sr.dim; ++d) {
                LaurentPoly e = LaurentPoly::constant(vars, 1);
                for (std::size_t mm = 0; mm < sr.torus_diag.size(); ++mm)
                    if (w[s].torus[mm] != 0)
                        e = e * sr.torus_diag[mm].at(d).pow(w[s].torus[mm]);
                mat.at(d, d) = std::move(e);
            }
            for (std::size_t g = 0; g < sr.xmat.size(); ++g)
                for (int p = 0; p < w[s].x[g]; ++p) mat = mat * sr.xmat[g];
            fac.push_back(std::move(mat));
        }

        PolyMatrix kron = ctx.order == KronOrder::first_slowest ? fac.front() : fac.back();
        if (ctx.order == KronOrder::first_slowest) {
            for (std::size_t s = 1; s < fac.size(); ++s) kron = kron.kron(fac[s]);
        } else {
            for (std::size_t s = fac.size() - 1; s-- > 0;) kron = kron.kron(fac[s]);
        }

        const auto c2 = vars->contains(ctx.qname) ? c.substitute(ctx.qname, vpow) : c;
        acc = acc + kron.scaled(c2);
    }
    return RepMatrix{dim, ctx.order, std::move(acc)};
}

PolyMatrix block_rtt_residual(const PolyMatrix& r,
                              const std::vector<std::vector<PolyMatrix>>& t) {
    const std::size_t n = t.size();
    if (n == 0 || r.rows() != n * n || r.cols() != n * n)
        throw std::invalid_argument("block_rtt_residual: dimension mismatch");
    const std::size_t d = t[0][0].rows();
    const VarSetPtr& vars = r.vars();

    PolyMatrix res(vars, n * n * d, n * n * d);
    auto add_block = [&](std::size_t bi, std::size_t bj, const PolyMatrix& blk, bool negate) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const LaurentPoly& x = blk.at(a, b);
                if (x.is_zero()) continue;
                auto& cell = res.at(bi * d + a, bj * d + b);
                cell = negate ? cell - x : cell + x;
            }
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            const LaurentPoly& s1 = r.at(i * n + k, a * n + b);
                            if (!s1.is_zero())
                                add_block(i * n + k, j * n + l,
                                          (t[a][j] * t[b][l]).scaled(s1), false);
                            const LaurentPoly& s2 = r.at(a * n + b, j * n + l);
                            if (!s2.is_zero())
                                add_block(i * n + k, j * n + l,
                                          (t[k][b] * t[i][a]).scaled(s2), true);
                        }
                }
    return res;
}

Section5 reproduce_section5(const SlModel& m, const FundamentalRep& rep) {
    if (m.n != 2) throw std::invalid_argument("reproduce_section5: the table is for n = 2");
    const auto vars = m.sig->vars();
    auto T = assemble_T(closed_form(m));

    // The calibration forced by the table: reversed Kronecker order and
    // f = v, g = v^-1 on top of q = v^2.
    const auto v = LaurentPoly::variable(vars, "v");
    RepContext ctx{sl_slot_reps(m, rep), KronOrder::last_slowest, "q", "v", 2};

    auto entry = [&](std::size_t i, std::size_t j) {
        auto e = T.at(i, j).subst_coeff("f1", v).subst_coeff("g1", v.inverse());
        return evaluate_in_rep(e, ctx);
    };

    Section5 s5{entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1),
                {{"order", order_name(ctx.order)},
                 {"f", "v"},
                 {"g", "v^-1"},
                 {"q", "v^2"}}};
    return s5;
}

Section5 reproduce_section5() {
    auto m = sl_model(2);
    auto rep = fundamental_rep(2, m.sig->vars());
    return reproduce_section5(m, rep);
}

ClMatrix classical_limit(const SlModel& m, const OpMatrix& t, const LimitBindings& b) {
    if (!t.sig() || *t.sig() != *m.sig)
        throw std::invalid_argument("classical_limit: matrix does not match the model");
    const auto vars = m.sig->vars();
    const std::size_t lidx = vars->index("lambda");
    const std::size_t vidx = vars->index("v");
    if (!b.lambda.vars() || *b.lambda.vars() != *vars || !b.f.vars() || *b.f.vars() != *vars ||
        !b.g.vars() || *b.g.vars() != *vars)
        throw std::invalid_argument("classical_limit: bindings are over the wrong variables");
    for (const auto& [e, c] : b.lambda.terms())
        if (e[lidx] != 0)
            throw std::invalid_argument("classical_limit: lambda binding leaves lambda unbound");

    const auto csig = classical_signature(m.sig);
    const auto vpow = LaurentPoly::variable(vars, "v", m.n);
    const Rat slope(1, m.n);

    ClMatrix out(csig, t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            auto e = t.at(i, j);
            for (int r = 1; r < m.n; ++r) {
                e = e.subst_coeff_poly("f" + std::to_string(r), b.f);
                e = e.subst_coeff_poly("g" + std::to_string(r), b.g);
            }
            e = e.subst_coeff_poly("lambda", b.lambda).subst_coeff("q", vpow);

            ClElement acc = ClElement::zero(csig);
            for (const auto& [w, c] : e.terms()) {
                for (const auto& [exps, coeff] : c.terms())
                    for (std::size_t x = 0; x < exps.size(); ++x)
                        if (x != vidx && exps[x] != 0)
                            throw std::invalid_argument(
                                "classical_limit: bindings leave formal parameters unbound");

                ClWord xword(w.size());
                for (std::size_t s = 0; s < w.size(); ++s) {
                    xword[s].h.assign(csig->slot(s).hgen.size(), 0);
                    xword[s].x = w[s].x;
                }

                // Product rule: the coefficient's own h-derivative keeps the
                // bare X word; the torus weight q^(a H~) contributes a H~ per
                // power at value h = 0, i.e. coefficient-at-one times a.
                const Int dcoeff = c.derive_at_one("v", slope).constant_value();
                if (dcoeff != 0) acc = acc + ClElement::make(csig, xword, Rat(dcoeff));

                Int at_one = 0;
                for (const auto& [exps, coeff] : c.terms()) at_one += coeff;
                if (at_one != 0)
                    for (std::size_t s = 0; s < w.size(); ++s)
                        for (std::size_t mm = 0; mm < w[s].torus.size(); ++mm)
                            if (w[s].torus[mm] != 0) {
                                ClWord ins = xword;
                                ins[s].h[mm] += 1;
                                acc = acc +
                                      ClElement::make(csig, std::move(ins),
                                                      Rat(w[s].torus[mm]) * Rat(at_one));
                            }
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

}  // namespace qgauss
