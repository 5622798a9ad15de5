#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>

#include "hopfstar/scalar.hpp"

namespace hopfstar {

using Vec = std::vector<Scalar>;

inline Vec vec_conj(const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

inline Vec unit_vec(size_t n, size_t i) {
    Vec v(n, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

/// Dense row-major matrix over Q(zeta_n) scalars.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols) {
        Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw DimensionMismatch("ragged column list");
            for (size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    /// permutation matrix P with P e_i = e_{perm[i]}
    static Matrix permutation(const std::vector<size_t>& perm) {
        Matrix m(perm.size(), perm.size());
        for (size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Scalar& operator()(size_t r, size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Scalar& operator()(size_t r, size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    Vec row(size_t r) const {
        Vec v(cols_);
        for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
        return v;
    }
    Vec column(size_t c) const {
        Vec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj_entries() const {
        Matrix c = *this;
        for (auto& x : c.data_) x = x.conj();
        return c;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& c) { return c.is_zero(); });
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_);
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix add shape");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sub shape");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Matrix operator*(const Scalar& c, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix mul shape");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (a.data_[i] != b.data_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix apply shape");
        Vec r(rows_, Scalar(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw NotInvertible("non-square matrix");
        size_t n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a(piv, col).is_zero()) ++piv;
            if (piv == n) throw NotInvertible("singular matrix");
            if (piv != col) {
                for (size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            Scalar d = a(col, col).inv();
            for (size_t j = 0; j < n; ++j) {
                a(col, j) *= d;
                inv(col, j) *= d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                Scalar f = a(i, col);
                for (size_t j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    Scalar determinant() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
        Matrix a = *this;
        size_t n = rows_;
        Scalar det(1);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a(piv, col).is_zero()) ++piv;
            if (piv == n) return Scalar(0);
            if (piv != col) {
                for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
                det = -det;
            }
            det *= a(col, col);
            Scalar d = a(col, col).inv();
            for (size_t i = col + 1; i < n; ++i) {
                if (a(i, col).is_zero()) continue;
                Scalar f = a(i, col) * d;
                for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            }
        }
        return det;
    }

    Matrix leading_block(size_t k) const {
        Matrix b(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
        return b;
    }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).to_string();
            }
        }
        return s + "]";
    }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (size_t p = 0; p < b.rows(); ++p)
                for (size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return r;
}

inline Vec kron_vec(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size(), Scalar(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

// row-major vectorization of a maps-matrix; vec(ATB) = (A kron B^T) vec(T)
inline Vec vec_rowmajor(const Matrix& m) {
    Vec v(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

inline Matrix unvec_rowmajor(const Vec& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unvec shape");
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

/// reduced row echelon form; returns pivot column indices
inline std::vector<size_t> rref_in_place(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Scalar d = m(r, c).inv();
        for (size_t j = 0; j < m.cols(); ++j) m(r, j) *= d;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// pivot-normalized reduced echelon basis of the row span, zero rows dropped
inline std::vector<Vec> row_space_basis(Matrix m) {
    std::vector<size_t> pivots = rref_in_place(m);
    std::vector<Vec> basis;
    for (size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
    return basis;
}

inline size_t rank(Matrix m) { return rref_in_place(m).size(); }

/// exact kernel basis (pivot-normalized) of m x = 0
inline std::vector<Vec> kernel_basis(Matrix m) {
    size_t cols = m.cols();
    std::vector<size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// subspace equality via reduced echelon forms of the row spans
inline bool subspace_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() && b.empty()) return true;
    size_t cols = a.empty() ? b[0].size() : a[0].size();
    for (const auto& v : a)
        if (v.size() != cols) throw DimensionMismatch("subspace_equal: ragged input");
    for (const auto& v : b)
        if (v.size() != cols) throw DimensionMismatch("subspace_equal: ragged input");
    return row_space_basis(Matrix::from_rows(a)) == row_space_basis(Matrix::from_rows(b));
}

/// is v in the row span of basis (given in any form)?
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return vec_is_zero(v);
    std::vector<Vec> rows = basis;
    size_t r0 = rank(Matrix::from_rows(rows));
    rows.push_back(v);
    return rank(Matrix::from_rows(rows)) == r0;
}

}  // namespace hopfstar
