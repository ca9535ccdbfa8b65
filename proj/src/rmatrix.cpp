#include "qgauss/rmatrix.hpp"

#include <stdexcept>

namespace qgauss {

namespace {

void check_ybe(const RMatrix& r) {
    if (!ybe_residual(r).is_zero())
        throw std::logic_error("RMatrix: '" + r.name + "' fails the Yang-Baxter equation");
}

RMatrix standard_r_impl(VarSetPtr vars, int n, const std::string& qname, bool flipped) {
    if (n < 2) throw std::invalid_argument("standard_r: need n >= 2");
    auto q = LaurentPoly::variable(vars, qname);
    auto one = LaurentPoly::constant(vars, 1);
    auto lambda = q - q.inverse();
    const auto un = static_cast<std::size_t>(n);
    RMatrix r{n, flipped ? "sl_q_flipped" : "sl_q", PolyMatrix(vars, un * un, un * un)};
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k < un; ++k) {
            const std::size_t row = i * un + k;
            r.grid.at(row, row) = i == k ? q : one;
            // the mixing block couples (i,k) to (k,i)
            const bool mix = flipped ? i < k : i > k;
            if (mix) r.grid.at(row, k * un + i) = lambda;
        }
    check_ybe(r);
    return r;
}

}  // namespace

RMatrix standard_r(VarSetPtr vars, int n, const std::string& qname) {
    return standard_r_impl(std::move(vars), n, qname, false);
}

RMatrix standard_r_flipped(VarSetPtr vars, int n, const std::string& qname) {
    return standard_r_impl(std::move(vars), n, qname, true);
}

RMatrix rpq(VarSetPtr vars, const std::string& kname, const std::string& pname,
            const std::string& qname) {
    auto k = LaurentPoly::variable(vars, kname);
    auto p = LaurentPoly::variable(vars, pname);
    auto q = LaurentPoly::variable(vars, qname);
    RMatrix r{2, "gl_pq_2", PolyMatrix(vars, 4, 4)};
    r.grid.at(0, 0) = k;
    r.grid.at(1, 1) = p;
    r.grid.at(2, 2) = q;
    r.grid.at(3, 3) = k;
    r.grid.at(2, 1) = k - p * q * k.inverse();
    check_ybe(r);
    return r;
}

RParts derived_parts(const RMatrix& r) {
    const std::size_t nn = r.grid.rows();
    const auto un = static_cast<std::size_t>(r.n);
    PolyMatrix diag(r.grid.vars(), nn, nn);
    for (std::size_t i = 0; i < nn; ++i) diag.at(i, i) = r.at(i, i);
    PolyMatrix perm(r.grid.vars(), nn, nn);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k < un; ++k)
            perm.at(i * un + k, k * un + i) = LaurentPoly::constant(r.grid.vars(), 1);
    PolyMatrix rplus = perm * r.grid;
    return RParts{std::move(diag), std::move(perm), std::move(rplus)};
}

PolyMatrix ybe_residual(const RMatrix& r) {
    const auto n = static_cast<std::size_t>(r.n);
    const std::size_t n3 = n * n * n;
    const auto& vars = r.grid.vars();
    PolyMatrix r12(vars, n3, n3), r13(vars, n3, n3), r23(vars, n3, n3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t row = i * n + k;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const LaurentPoly& x = r.at(row, a * n + b);
                    if (x.is_zero()) continue;
                    for (std::size_t s = 0; s < n; ++s) {
                        // spectator index s in the slot R leaves alone
                        r12.at((i * n + k) * n + s, (a * n + b) * n + s) = x;
                        r13.at((i * n + s) * n + k, (a * n + s) * n + b) = x;
                        r23.at((s * n + i) * n + k, (s * n + a) * n + b) = x;
                    }
                }
        }
    return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace qgauss
