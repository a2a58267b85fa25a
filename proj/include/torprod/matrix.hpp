#pragma once

#include "torprod/errors.hpp"
#include "torprod/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace torprod {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[a] += c * row[b]
    void row_axpy(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    // col[a] += c * col[b]
    void col_axpy(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void scale_row(std::size_t a, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= c;
    }

    Matrix multiplied_by(const Matrix& o) const {
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

// Fraction-free Gaussian elimination (Bareiss).  Returns the rank over Q; if
// `det_out` is non-null the matrix must be square and the signed determinant
// is written there.  Division in the Bareiss update is exact.
inline std::size_t bareiss_rank(IntMatrix m, Int* det_out = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) {
            if (det_out) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (piv != r) {
            m.swap_rows(piv, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = num / prev;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    if (det_out) {
        if (rows != cols) throw DimensionMismatch("determinant of a non-square matrix");
        *det_out = (r == rows) ? Int(sign * prev) : Int(0);
    }
    return r;
}

inline Int determinant(const IntMatrix& m) {
    Int d;
    bareiss_rank(m, &d);
    return d;
}

struct SnfResult {
    IntMatrix d;               // diagonal form, d = u * a * v
    IntMatrix u, v;            // unimodular row / column transforms
    std::vector<Int> divisors; // nonzero diagonal entries, d_i | d_{i+1}, all positive
    std::size_t rank = 0;
};

// Smith normal form over Z by pivoting on a minimal-magnitude entry and
// Euclidean reduction, with the usual divisibility repair step.  U and V are
// accumulated from the identity, so |det U| = |det V| = 1 by construction.
inline SnfResult smith_normal_form(const IntMatrix& a) {
    SnfResult res;
    res.d = a;
    res.u = IntMatrix::identity(a.rows());
    res.v = IntMatrix::identity(a.cols());
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = std::min(rows, cols);

    auto find_min_entry = [&](std::size_t t, std::size_t& bi, std::size_t& bj) -> bool {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d(i, j) == 0) continue;
                Int mag = abs_int(d(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    bi = i;
                    bj = j;
                }
            }
        return found;
    };

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t bi = t, bj = t;
        if (!find_min_entry(t, bi, bj)) break;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);

        for (;;) {
            // Clear column t below the pivot.  If a Euclidean step leaves a
            // remainder it is strictly smaller than the pivot, so re-pivoting
            // on the minimum restores progress and the loop terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.row_axpy(i, t, -q);
                    u.row_axpy(i, t, -q);
                }
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.col_axpy(j, t, -q);
                    v.col_axpy(j, t, -q);
                }
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Divisibility repair: the pivot must divide every entry of the
            // remaining block for the divisor chain to come out right.
            bool repaired = false;
            for (std::size_t i = t + 1; i < rows && !repaired; ++i)
                for (std::size_t j = t + 1; j < cols && !repaired; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.row_axpy(t, i, Int(1));
                        u.row_axpy(t, i, Int(1));
                        repaired = true;
                    }
            if (!repaired) break;
        }

        if (d(t, t) < 0) {
            d.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (d(t, t) != 0) {
            res.divisors.push_back(d(t, t));
            ++res.rank;
        }
    return res;
}

}  // namespace torprod
