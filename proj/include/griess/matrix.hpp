#pragma once

#include "griess/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace griess {

/// Thrown when a matrix fails to split into eigenspaces over a requested
/// spectrum; `defect` is the dimension left uncovered.
class NotDiagonalizableError : public std::runtime_error {
public:
    NotDiagonalizableError(std::string what, int defect)
        : std::runtime_error(std::move(what)), defect(defect) {}
    int defect;
};

/// Dense matrix over an exact field (Rational or Eisenstein).  Only the
/// operations needed for exact linear algebra on small matrices: arithmetic,
/// row reduction, kernels, determinants and eigenspace splitting.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    Mat operator*(const T& s) const {
        Mat r = *this;
        for (auto& v : r.e_) v *= s;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<T> e_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<size_t> rref(Mat<T>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        T inv = m(row, col).inverse();
        for (size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            T f = m(i, col);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
size_t rank(Mat<T> m) {
    return rref(m).size();
}

/// Basis of the null space, one vector per free column.  Each basis vector
/// carries a 1 in its free coordinate, so the result is deterministic.
template <class T>
std::vector<std::vector<T>> kernel(Mat<T> m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(n, T(0));
        v[free] = T(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
T determinant(Mat<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    T det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return T(0);
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        T inv = m(col, col).inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            T f = m(i, col) * inv;
            for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Sylvester's criterion: all leading principal minors strictly positive.
/// Requires a symmetric matrix and rejects semidefinite ones.
inline bool is_positive_definite(const Mat<Rational>& m) {
    if (!m.is_symmetric())
        throw std::invalid_argument("positive-definiteness requires a symmetric matrix");
    for (size_t k = 1; k <= m.rows(); ++k) {
        Mat<Rational> lead(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
        if (determinant(lead).sign() <= 0) return false;
    }
    return true;
}

/// Eigenbasis of m split over an explicit list of eigenvalues.  Returns one
/// (possibly empty) basis per eigenvalue, in the order given.  If the
/// eigenspaces do not fill the whole space the matrix has spectrum outside
/// the list or a nontrivial Jordan block, and the error reports the defect.
template <class T>
std::vector<std::vector<std::vector<T>>> split_eigenspaces(const Mat<T>& m,
                                                           const std::vector<T>& eigenvalues) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigenspace split of non-square matrix");
    std::vector<std::vector<std::vector<T>>> spaces;
    size_t total = 0;
    for (const T& mu : eigenvalues) {
        Mat<T> shifted = m - Mat<T>::identity(m.rows()) * mu;
        spaces.push_back(kernel(shifted));
        total += spaces.back().size();
    }
    if (total != m.rows())
        throw NotDiagonalizableError("matrix is not diagonalizable over the given spectrum",
                                     static_cast<int>(m.rows() - total));
    return spaces;
}

/// Is v in the column span of the given vectors?
template <class T>
bool in_span(const std::vector<std::vector<T>>& vectors, const std::vector<T>& v) {
    if (vectors.empty()) {
        for (const T& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    size_t n = vectors.front().size();
    Mat<T> a(n, vectors.size());
    Mat<T> aug(n, vectors.size() + 1);
    for (size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != n) throw std::invalid_argument("span vectors of mixed length");
        for (size_t i = 0; i < n; ++i) a(i, j) = aug(i, j) = vectors[j][i];
    }
    for (size_t i = 0; i < n; ++i) aug(i, vectors.size()) = v[i];
    return rank(std::move(a)) == rank(std::move(aug));
}

/// Coefficients expressing v over linearly independent vectors; nullopt when
/// v lies outside their span.  Throws if the vectors are dependent, since the
/// coefficients would not be unique.
template <class T>
std::optional<std::vector<T>> coordinates_in_span(const std::vector<std::vector<T>>& vectors,
                                                  const std::vector<T>& v) {
    size_t k = vectors.size();
    if (k == 0) throw std::invalid_argument("coordinates over an empty vector set");
    size_t n = vectors.front().size();
    if (v.size() != n) throw std::invalid_argument("span vectors of mixed length");
    Mat<T> aug(n, k + 1);
    for (size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != n) throw std::invalid_argument("span vectors of mixed length");
        for (size_t i = 0; i < n; ++i) aug(i, j) = vectors[j][i];
    }
    for (size_t i = 0; i < n; ++i) aug(i, k) = v[i];
    std::vector<size_t> pivots = rref(aug);
    for (size_t c : pivots)
        if (c == k) return std::nullopt;
    if (pivots.size() != k)
        throw std::invalid_argument("coordinates over a dependent vector set");
    std::vector<T> x(k, T(0));
    for (size_t r = 0; r < k; ++r) x[pivots[r]] = aug(r, k);
    return x;
}

template <class T>
bool spans_equal(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    return true;
}

}  // namespace griess
