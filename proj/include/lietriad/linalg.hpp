// Dense exact-rational vectors and matrices with the handful of solvers the
// rest of the library needs: RREF, rank, nullspace, linear solve, inverse.
// Dimensions never exceed the ambient dimension of an E8 lattice plus one,
// so everything is plain Gaussian elimination.
#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lietriad/rational.hpp"

namespace lietriad {

using Vec = std::vector<Rational>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

// strict lexicographic comparison, used for canonical orderings
inline bool vec_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    // matrix whose columns are the given vectors
    static Mat from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec row(int i) const {
        Vec r(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
        return r;
    }
    Vec col(int j) const {
        Vec c(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
        return c;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    Vec apply(const Vec& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        Vec r(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            Rational s;
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero()) s += at(i, j) * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// in-place reduced row echelon form; returns pivot column indices
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

// basis of {x : M x = 0}, deterministic (one vector per free column)
inline std::vector<Vec> nullspace(Mat m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<std::size_t>(pivots[k])] = -m.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// solves M x = b exactly; nullopt when inconsistent; free variables set to 0
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(static_cast<std::size_t>(m.cols()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<std::size_t>(pivots[k])] = aug.at(static_cast<int>(k), m.cols());
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[static_cast<std::size_t>(n) - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// dimension of the span of the given vectors
inline int span_dim(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    return rank(Mat::from_rows(vs));
}

// orthogonal projector onto span(cols) w.r.t. the standard inner product:
// P = B (B^T B)^{-1} B^T, exact
inline Mat orthogonal_projector(const std::vector<Vec>& basis, int dim) {
    if (basis.empty()) return Mat(dim, dim);
    Mat b = Mat::from_columns(basis);
    Mat bt = b.transposed();
    auto g = inverse(bt * b);
    if (!g) throw std::invalid_argument("orthogonal_projector: basis is dependent");
    return b * (*g * bt);
}

} // namespace lietriad
