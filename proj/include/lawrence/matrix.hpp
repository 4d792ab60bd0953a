#ifndef LAWRENCE_MATRIX_HPP
#define LAWRENCE_MATRIX_HPP

#include "lawrence/vector.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawrence {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
        IntMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw std::invalid_argument("ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    [[nodiscard]] IntVector row(std::size_t i) const {
        auto first = a_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
        return IntVector(first, first + static_cast<std::ptrdiff_t>(cols_));
    }
    [[nodiscard]] IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] IntVector operator*(const IntVector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer s;
            for (std::size_t j = 0; j < cols_; ++j) {
                const Integer& a = (*this)(i, j);
                if (!a.is_zero() && !x[j].is_zero()) s += a * x[j];
            }
            y[i] = std::move(s);
        }
        return y;
    }

    [[nodiscard]] IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Integer& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    [[nodiscard]] bool is_nonnegative() const {
        for (const auto& x : a_)
            if (x.sign() < 0) return false;
        return true;
    }

    [[nodiscard]] bool has_zero_column() const {
        for (std::size_t j = 0; j < cols_; ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < rows_ && zero; ++i) zero = (*this)(i, j).is_zero();
            if (zero) return true;
        }
        return false;
    }

    [[nodiscard]] bool annihilates(const IntVector& x) const { return ((*this) * x).is_zero(); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

/// Stack matrices vertically; all must share a column count.
inline IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    IntMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    return m;
}

}  // namespace lawrence

#endif
