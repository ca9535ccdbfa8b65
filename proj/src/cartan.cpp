#include "qgauss/cartan.hpp"

#include <stdexcept>

namespace qgauss {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    RatMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in +");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += rhs.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in -");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= rhs.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in *");
    RatMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r.at(i, j) += x * rhs.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
    return a * b - b * a;
}

ChevalleyData build_chevalley(int n) {
    if (n < 2) throw std::invalid_argument("build_chevalley: need n >= 2");
    ChevalleyData d;
    d.n = n;
    const int r = n - 1;
    d.cartan.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        d.cartan[i][i] = 2;
        if (i > 0) d.cartan[i][i - 1] = -1;
        if (i + 1 < r) d.cartan[i][i + 1] = -1;
    }
    // H~_i = (1/n) ( sum_{k=i}^{n-1} (n-k) H_k  -  sum_{k=1}^{i-1} k H_k ),
    // extended to i = n where the first sum is empty.
    d.htilde.assign(n, std::vector<Rat>(r, Rat(0)));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= r; ++k)
            d.htilde[i - 1][k - 1] = k >= i ? Rat(n - k, n) : Rat(-k, n);
    // Contract with the Cartan matrix to get the Ad exponents; the result
    // must be integral even though the H~ coefficients are fractions.
    d.ad_exp_plus.assign(n, std::vector<int>(r, 0));
    for (int m = 0; m < n; ++m)
        for (int j = 0; j < r; ++j) {
            Rat c(0);
            for (int k = 0; k < r; ++k) c += d.htilde[m][k] * d.cartan[k][j];
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("build_chevalley: non-integral adjoint exponent");
            const int ci = static_cast<int>(boost::multiprecision::numerator(c));
            // closed form the contraction must reproduce
            const int expect = (m == j ? 1 : 0) - (m == j + 1 ? 1 : 0);
            if (ci != expect)
                throw std::logic_error("build_chevalley: adjoint exponent table mismatch");
            d.ad_exp_plus[m][j] = ci;
        }
    return d;
}

nlohmann::json ChevalleyData::to_json() const {
    nlohmann::json jh = nlohmann::json::array();
    for (const auto& row : htilde) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& c : row) jr.push_back(rat_str(c));
        jh.push_back(std::move(jr));
    }
    return {{"n", n}, {"cartan", cartan}, {"htilde", jh}, {"ad_exp_plus", ad_exp_plus}};
}

FundamentalRep fundamental_rep(int n, VarSetPtr vars, const std::string& vname) {
    if (n < 2) throw std::invalid_argument("fundamental_rep: need n >= 2");
    if (!vars || !vars->contains(vname))
        throw std::invalid_argument("fundamental_rep: variable set lacks '" + vname + "'");
    FundamentalRep rep;
    rep.n = n;
    rep.vars = vars;
    rep.vname = vname;
    const std::size_t un = static_cast<std::size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
        rep.xp.push_back(RatMatrix::unit(un, i, i + 1));
        rep.xm.push_back(RatMatrix::unit(un, i + 1, i));
        RatMatrix hi(un, un);
        hi.at(i, i) = 1;
        hi.at(i + 1, i + 1) = -1;
        rep.h.push_back(std::move(hi));
    }
    // H~_i acts as E_ii - (1/n) I, so K_i = v^(n H~_i) is diagonal with
    // integer exponents n*delta_ij - 1.
    for (int i = 0; i < n; ++i) {
        RatMatrix ht = RatMatrix::unit(un, i, i);
        for (int j = 0; j < n; ++j) ht.at(j, j) -= Rat(1, n);
        rep.htilde.push_back(std::move(ht));
        std::vector<LaurentPoly> kd;
        for (int j = 0; j < n; ++j)
            kd.push_back(LaurentPoly::variable(vars, vname, (i == j ? n : 0) - 1));
        rep.kdiag.push_back(std::move(kd));
    }
    return rep;
}

}  // namespace qgauss
