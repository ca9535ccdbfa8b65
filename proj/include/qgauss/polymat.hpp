#pragma once

// Dense matrices over the Laurent coefficient ring.  Used for R-matrix grids
// and for evaluated representations; most grids are sparse in practice, so
// multiplication skips zero entries.

#include <functional>
#include <optional>
#include <utility>

#include "qgauss/ring.hpp"

namespace qgauss {

class PolyMatrix {
public:
    PolyMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols)
        : vars_(std::move(vars)), rows_(rows), cols_(cols),
          a_(rows * cols, LaurentPoly::zero(vars_)) {
        if (!vars_) throw std::invalid_argument("PolyMatrix: null VarSet");
    }

    static PolyMatrix identity(VarSetPtr vars, std::size_t n) {
        PolyMatrix m(std::move(vars), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(m.vars_, 1);
        return m;
    }

    const VarSetPtr& vars() const { return vars_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    PolyMatrix operator+(const PolyMatrix& rhs) const {
        require_same_shape(rhs);
        PolyMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + rhs.a_[i];
        return r;
    }

    PolyMatrix operator-(const PolyMatrix& rhs) const {
        require_same_shape(rhs);
        PolyMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - rhs.a_[i];
        return r;
    }

    PolyMatrix operator*(const PolyMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("PolyMatrix: dimension mismatch in *");
        PolyMatrix r(vars_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const LaurentPoly& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const LaurentPoly& y = rhs.at(k, j);
                    if (y.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + x * y;
                }
            }
        return r;
    }

    PolyMatrix scaled(const LaurentPoly& c) const {
        PolyMatrix r = *this;
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    PolyMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
        PolyMatrix r = *this;
        for (auto& x : r.a_) x = f(x);
        return r;
    }

    // Kronecker product with *this as the slow index.
    PolyMatrix kron(const PolyMatrix& rhs) const {
        PolyMatrix r(vars_, rows_ * rhs.rows_, cols_ * rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const LaurentPoly& x = at(i, j);
                if (x.is_zero()) continue;
                for (std::size_t k = 0; k < rhs.rows_; ++k)
                    for (std::size_t l = 0; l < rhs.cols_; ++l) {
                        const LaurentPoly& y = rhs.at(k, l);
                        if (y.is_zero()) continue;
                        r.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = x * y;
                    }
            }
        return r;
    }

    bool operator==(const PolyMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != rhs.a_[i]) return false;
        return true;
    }
    bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Row-major position of the first nonzero entry, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) return std::make_pair(i, j);
        return std::nullopt;
    }

    nlohmann::json to_json() const {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& x : a_) entries.push_back(x.to_json());
        return {{"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}};
    }

private:
    VarSetPtr vars_;
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> a_;

    void require_same_shape(const PolyMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("PolyMatrix: shape mismatch");
    }
};

}  // namespace qgauss
