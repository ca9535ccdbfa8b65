#include "qgauss/opmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgauss {

OpMatrix::OpMatrix(SignaturePtr sig, std::size_t rows, std::size_t cols)
    : sig_(std::move(sig)), rows_(rows), cols_(cols) {
    if (!sig_) throw std::invalid_argument("OpMatrix: null signature");
    a_.assign(rows_ * cols_, AlgebraElement::zero(sig_));
}

OpMatrix OpMatrix::identity(SignaturePtr sig, std::size_t n) {
    OpMatrix m(std::move(sig), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::one(m.sig_);
    return m;
}

OpMatrix OpMatrix::operator+(const OpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("OpMatrix: shape mismatch in +");
    OpMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + rhs.a_[i];
    return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("OpMatrix: shape mismatch in -");
    OpMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - rhs.a_[i];
    return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("OpMatrix: dimension mismatch in *");
    OpMatrix r(sig_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const AlgebraElement& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const AlgebraElement& y = rhs.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * y;
            }
        }
    return r;
}

bool OpMatrix::operator==(const OpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

bool OpMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<bool> OpMatrix::support() const {
    std::vector<bool> sup(sig_->slot_count(), false);
    for (const auto& x : a_) {
        auto s = x.support();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) sup[i] = true;
    }
    return sup;
}

std::optional<std::pair<std::size_t, std::size_t>> OpMatrix::first_nonzero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

nlohmann::json OpMatrix::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& x : a_) entries.push_back(x.to_json());
    return {{"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}};
}

OpMatrix gauss_product(const OpMatrix& a, const OpMatrix& b) {
    const auto sa = a.support();
    const auto sb = b.support();
    for (std::size_t s = 0; s < sa.size(); ++s)
        if (sa[s] && sb[s])
            throw std::invalid_argument("gauss_product: factors overlap on slot '" +
                                        a.sig()->slot(s).name + "'");
    return a * b;
}

OpMatrix rtt_mixed_residual(const PolyMatrix& s, const OpMatrix& a, const OpMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n)
        throw std::invalid_argument("rtt_mixed_residual: factors must be square and equal-sized");
    if (s.rows() != n * n || s.cols() != n * n)
        throw std::invalid_argument("rtt_mixed_residual: grid must be n^2 x n^2");
    OpMatrix res(a.sig(), n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t row = i * n + k;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    const std::size_t col = j * n + l;
                    AlgebraElement acc = AlgebraElement::zero(a.sig());
                    for (std::size_t ai = 0; ai < n; ++ai)
                        for (std::size_t bi = 0; bi < n; ++bi) {
                            // S A_1 B_2 contributes S[(i,k),(a,b)] A_{aj} B_{bl}
                            const LaurentPoly& sl = s.at(row, ai * n + bi);
                            if (!sl.is_zero() && !a.at(ai, j).is_zero() && !b.at(bi, l).is_zero())
                                acc = acc + (a.at(ai, j) * b.at(bi, l)).scale(sl);
                            // B_2 A_1 S contributes B_{kb} A_{ia} S[(a,b),(j,l)]
                            const LaurentPoly& sr = s.at(ai * n + bi, col);
                            if (!sr.is_zero() && !b.at(k, bi).is_zero() && !a.at(i, ai).is_zero())
                                acc = acc - (b.at(k, bi) * a.at(i, ai)).scale(sr);
                        }
                    res.at(row, col) = std::move(acc);
                }
        }
    return res;
}

OpMatrix rtt_residual(const PolyMatrix& r, const OpMatrix& t) {
    return rtt_mixed_residual(r, t, t);
}

AlgebraElement qdet(const OpMatrix& t, const LaurentPoly& q) {
    if (t.rows() != t.cols())
        throw std::invalid_argument("qdet: matrix must be square");
    const std::size_t n = t.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    AlgebraElement det = AlgebraElement::zero(t.sig());
    const LaurentPoly mq = -q;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        AlgebraElement prod = AlgebraElement::scalar(t.sig(), mq.pow(inv));
        for (std::size_t i = 0; i < n; ++i) prod = prod * t.at(i, perm[i]);
        det = det + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

OpMatrix triangular_inverse(const OpMatrix& t, Triangle shape) {
    if (t.rows() != t.cols())
        throw std::invalid_argument("triangular_inverse: matrix must be square");
    const std::size_t n = t.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool offside = shape == Triangle::lower ? j > i : j < i;
            if (offside && !t.at(i, j).is_zero())
                throw std::invalid_argument("triangular_inverse: nonzero entry on the wrong side");
        }
    // T = D (I + D^-1 N) with N strictly triangular, so the series for
    // (I + D^-1 N)^-1 stops after n terms.
    OpMatrix dinv(t.sig(), n, n);
    for (std::size_t i = 0; i < n; ++i) dinv.at(i, i) = t.at(i, i).inverse();
    OpMatrix m(t.sig(), n, n);  // -D^-1 N
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = -(dinv.at(i, i) * t.at(i, j));
    OpMatrix series = OpMatrix::identity(t.sig(), n);
    OpMatrix power = OpMatrix::identity(t.sig(), n);
    for (std::size_t k = 1; k < n; ++k) {
        power = m * power;
        series = series + power;
    }
    return series * dinv;
}

}  // namespace qgauss
