#pragma once

#include "mcf/exact_scalar.hpp"

namespace mcf {

// Small dense matrix over a field-ish type (Rat or ExactScalar are the two
// instantiations used). Row-major.
template <typename T>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(size_t rows, size_t cols, const T& fill = T(0))
        : r_(rows), c_(cols), d_(rows * cols, fill) {}
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw std::logic_error("Mat: ragged rows");
            for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Mat from_int_rows(const std::vector<std::vector<long>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < m.c_; ++j) m(i, j) = T(rows[i][j]);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::logic_error("Mat: dimension mismatch");
        Mat m(r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                const T& a = (*this)(i, k);
                for (size_t j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
            }
        return m;
    }
    Mat operator+(const Mat& o) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
        return m;
    }
    Mat scaled(const T& s) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
        return m;
    }
    Mat transpose() const {
        Mat m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != c_) throw std::logic_error("Mat::apply: size mismatch");
        std::vector<T> r(r_, T(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> r(r_);
        for (size_t i = 0; i < r_; ++i) r[i] = (*this)(i, j);
        return r;
    }

private:
    size_t r_, c_;
    std::vector<T> d_;
};

using RatMat = Mat<Rat>;
using ExactMat = Mat<ExactScalar>;

Rat det(const RatMat& m);
ExactScalar det(const ExactMat& m);
RatMat inverse(const RatMat& m);          // throws std::domain_error when singular
ExactMat inverse(const ExactMat& m);

// det(xI - m), exact.
Poly charpoly(const RatMat& m);
// Minimal polynomial (monic) of a square rational matrix.
Poly minpoly(const RatMat& m);

bool is_nonnegative(const RatMat& m);
bool is_integer(const RatMat& m);
RatMat to_rat(const ExactMat& m);         // requires all entries rational
ExactMat to_exact(const RatMat& m);

std::string encode_mat(const RatMat& m);  // canonical byte encoding

// Solve m x = b over the rationals; nullopt when inconsistent/singular.
std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b);

} // namespace mcf
