#pragma once

// Small dense row-major matrix over a descartes scalar.  Sizes here never
// exceed (n+2)x(n+2) with n <= 16, so no blocking or sparse storage.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descartes/scalar.hpp"

namespace descartes {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Scalar T>
using Vec = std::vector<T>;

template <Scalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const Vec<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<T> row(std::size_t r) const {
        return Vec<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vec<T> col(std::size_t c) const {
        Vec<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }
    void set_row(std::size_t r, const Vec<T>& v) {
        if (v.size() != cols_) throw DimensionError("row length mismatch");
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Columns [first, first+count) as a new matrix.
    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix out(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
    friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
    friend Matrix operator*(Matrix l, const T& s) { return l *= s; }
    friend Matrix operator*(const T& s, Matrix r) { return r *= s; }

    friend Matrix operator*(const Matrix& l, const Matrix& r) {
        if (l.cols_ != r.rows_)
            throw DimensionError("matrix product " + l.shape() + " * " + r.shape());
        Matrix out(l.rows_, r.cols_);
        for (std::size_t i = 0; i < l.rows_; ++i) {
            for (std::size_t k = 0; k < l.cols_; ++k) {
                const T& a = l(i, k);
                if (ScalarTraits<T>::is_zero(a, 0.0)) continue;
                for (std::size_t j = 0; j < r.cols_; ++j) out(i, j) += a * r(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& l, const Matrix& r) {
        return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    const std::vector<T>& data() const { return data_; }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError("shape mismatch " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Scalar T>
Vec<T> operator*(const Vec<T>& v, const Matrix<T>& m) {
    if (v.size() != m.rows()) throw DimensionError("vector-matrix size mismatch");
    Vec<T> out(m.cols(), T(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    return out;
}

/// u^T A v.
template <Scalar T>
T bilinear(const Vec<T>& u, const Matrix<T>& a, const Vec<T>& v) {
    if (u.size() != a.rows() || v.size() != a.cols()) throw DimensionError("bilinear form size mismatch");
    T acc(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (ScalarTraits<T>::is_zero(u[i], 0.0)) continue;
        T inner(0);
        for (std::size_t j = 0; j < v.size(); ++j) inner += a(i, j) * v[j];
        acc += u[i] * inner;
    }
    return acc;
}

template <Scalar T>
T dot(const Vec<T>& u, const Vec<T>& v) {
    if (u.size() != v.size()) throw DimensionError("dot size mismatch");
    T acc(0);
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gauss-Jordan inverse.  Float mode pivots on the largest magnitude and
/// treats pivots below `tol` as zero; exact mode pivots on any nonzero.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, double tol = 1e-14) {
    using Tr = ScalarTraits<T>;
    if (!m.square()) throw DimensionError("inverse of non-square matrix " + m.shape());
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        if constexpr (Tr::is_exact) {
            for (std::size_t r = c; r < n; ++r)
                if (a(r, c).sign() != 0) {
                    pivot = r;
                    break;
                }
        } else {
            double best = tol;
            for (std::size_t r = c; r < n; ++r)
                if (Tr::abs(a(r, c)) > best) {
                    best = Tr::abs(a(r, c));
                    pivot = r;
                }
        }
        if (pivot == n) throw SingularMatrixError("matrix is singular");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        }
        T p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || Tr::is_zero(a(r, c), 0.0)) continue;
            T f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Solution set of A x = b: one particular solution plus a basis of the
/// null space.  Throws if the system is inconsistent.
template <Scalar T>
struct LinearSolution {
    Vec<T> particular;
    std::vector<Vec<T>> null_basis;
};

template <Scalar T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Vec<T>& b, double tol = 1e-12) {
    using Tr = ScalarTraits<T>;
    if (b.size() != a.rows()) throw DimensionError("rhs size mismatch");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Matrix<T> m(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
        m(r, cols) = b[r];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t pivot = rows;
        double best = tol;
        for (std::size_t r = pr; r < rows; ++r) {
            if constexpr (Tr::is_exact) {
                if (m(r, c).sign() != 0) {
                    pivot = r;
                    break;
                }
            } else if (Tr::abs(m(r, c)) > best) {
                best = Tr::abs(m(r, c));
                pivot = r;
            }
        }
        if (pivot == rows) continue;
        for (std::size_t j = 0; j <= cols; ++j) std::swap(m(pivot, j), m(pr, j));
        T p = m(pr, c);
        for (std::size_t j = 0; j <= cols; ++j) m(pr, j) /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || Tr::is_zero(m(r, c), 0.0)) continue;
            T f = m(r, c);
            for (std::size_t j = 0; j <= cols; ++j) m(r, j) -= f * m(pr, j);
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    for (std::size_t r = pr; r < rows; ++r)
        if (!Tr::is_zero(m(r, cols), tol)) throw std::domain_error("inconsistent linear system");

    LinearSolution<T> out;
    out.particular.assign(cols, T(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.particular[pivot_cols[i]] = m(i, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, f);
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace descartes
