#include "mcf/matrix.hpp"

#include <sstream>

namespace mcf {

namespace {

template <typename T>
T det_gauss(Mat<T> m) {
    size_t n = m.rows();
    if (n != m.cols()) throw std::logic_error("det: not square");
    T result(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != k) {
            for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            result = -result;
        }
        result = result * m(k, k);
        T inv_piv = T(1) / m(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            T f = m(i, k) * inv_piv;
            for (size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return result;
}

template <typename T>
Mat<T> inverse_gauss(const Mat<T>& a) {
    size_t n = a.rows();
    if (n != a.cols()) throw std::logic_error("inverse: not square");
    Mat<T> m = a, inv = Mat<T>::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        T ip = T(1) / m(k, k);
        for (size_t j = 0; j < n; ++j) { m(k, j) = m(k, j) * ip; inv(k, j) = inv(k, j) * ip; }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            T f = m(i, k);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace

Rat det(const RatMat& a) {
    size_t n = a.rows();
    if (n != a.cols()) throw std::logic_error("det: not square");
    RatMat m = a;
    Rat result(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            result = -result;
        }
        result *= m(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return result;
}

ExactScalar det(const ExactMat& m) { return det_gauss(m); }

RatMat inverse(const RatMat& m) { return to_rat(inverse_gauss(to_exact(m))); }
ExactMat inverse(const ExactMat& m) { return inverse_gauss(m); }

Poly charpoly(const RatMat& m) {
    // Faddeev-LeVerrier: exact over Q, divisions by integers only.
    size_t n = m.rows();
    if (n != m.cols()) throw std::logic_error("charpoly: not square");
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    RatMat M(n, n); // M_0 = 0
    for (size_t k = 1; k <= n; ++k) {
        // M_k = m * (M_{k-1} + c_{n-k+1} I)
        RatMat t = M;
        for (size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        M = m * t;
        Rat tr(0);
        for (size_t i = 0; i < n; ++i) tr += M(i, i);
        c[n - k] = -tr / Rat(long(k));
    }
    return Poly(std::move(c));
}

Poly minpoly(const RatMat& m) {
    size_t n = m.rows();
    if (n != m.cols()) throw std::logic_error("minpoly: not square");
    size_t dim = n * n;
    // Incrementally row-reduce vectorized powers of m.
    std::vector<std::vector<Rat>> basis;       // reduced rows
    std::vector<size_t> pivot_col;
    std::vector<std::vector<Rat>> combo;       // expression of each basis row in powers
    RatMat p = RatMat::identity(n);
    for (size_t k = 0;; ++k) {
        std::vector<Rat> v(dim);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = p(i, j);
        std::vector<Rat> expr(k + 1, Rat(0));
        expr[k] = Rat(1);
        // Reduce v against the basis.
        for (size_t b = 0; b < basis.size(); ++b) {
            Rat f = v[pivot_col[b]];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j < dim; ++j) v[j] -= f * basis[b][j];
            for (size_t j = 0; j < combo[b].size() && j < expr.size(); ++j)
                expr[j] -= f * combo[b][j];
        }
        size_t pc = dim;
        for (size_t j = 0; j < dim; ++j)
            if (sgn(v[j]) != 0) { pc = j; break; }
        if (pc == dim) {
            // Dependence: sum_j expr[j] m^j = 0 with expr[k] = 1.
            return Poly(std::move(expr)).monic();
        }
        Rat ip = Rat(1) / v[pc];
        for (size_t j = 0; j < dim; ++j) v[j] *= ip;
        for (auto& e : expr) e *= ip;
        basis.push_back(std::move(v));
        pivot_col.push_back(pc);
        combo.push_back(std::move(expr));
        p = p * m;
    }
}

bool is_nonnegative(const RatMat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) < 0) return false;
    return true;
}

bool is_integer(const RatMat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

RatMat to_rat(const ExactMat& m) {
    RatMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational())
                throw std::logic_error("to_rat: algebraic entry");
            r(i, j) = m(i, j).rat();
        }
    return r;
}

ExactMat to_exact(const RatMat& m) {
    ExactMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = ExactScalar(m(i, j));
    return r;
}

std::string encode_mat(const RatMat& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << ":";
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) os << rat_str(m(i, j)) << ",";
    return os.str();
}

std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b) {
    size_t rows = m.rows(), cols = m.cols();
    if (b.size() != rows) throw std::logic_error("solve: size mismatch");
    // Gauss with augmented column.
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
        a[i][cols] = b[i];
    }
    std::vector<size_t> where(cols, SIZE_MAX);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && sgn(a[sel][col]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        Rat ip = Rat(1) / a[row][col];
        for (size_t j = col; j <= cols; ++j) a[row][j] *= ip;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(a[i][col]) == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        where[col] = row++;
    }
    for (size_t i = row; i < rows; ++i)
        if (sgn(a[i][cols]) != 0) return std::nullopt; // inconsistent
    std::vector<Rat> x(cols, Rat(0));
    for (size_t col = 0; col < cols; ++col)
        if (where[col] != SIZE_MAX) x[col] = a[where[col]][cols];
    return x;
}

} // namespace mcf
