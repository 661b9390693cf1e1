#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hodgeforge/gaussian.hpp"
#include "hodgeforge/rational.hpp"

namespace hodgeforge {

enum class Field { Rational, Gaussian };

template <class F>
constexpr Field field_of() {
    if constexpr (std::is_same_v<F, Rational>) {
        return Field::Rational;
    } else {
        static_assert(std::is_same_v<F, Gaussian>, "matrices are over Q or Q(i)");
        return Field::Gaussian;
    }
}

template <class F>
using Vector = std::vector<F>;

// Dense row-major matrix over Q or Q(i). The field is part of the type, so
// mixing fields is a compile error; crossing over is explicit via complexify().
template <class F>
class Matrix {
public:
    using value_type = F;
    static constexpr Field field = field_of<F>();

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const F& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_columns(std::size_t rows, std::span<const Vector<F>> columns) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    F& at(std::size_t i, std::size_t j) {
        check(i, j);
        return (*this)(i, j);
    }
    [[nodiscard]] const F& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return (*this)(i, j);
    }

    std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    [[nodiscard]] Vector<F> column(std::size_t j) const {
        Vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    [[nodiscard]] std::span<const F> data() const noexcept { return data_; }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    [[nodiscard]] std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& x : data_) n += x.is_zero() ? 0 : 1;
        return n;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (auto& x : data_)
            if (!x.is_zero()) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix: index out of range");
    }
    void same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;
using QVector = Vector<Rational>;
using GVector = Vector<Gaussian>;

// Matrix product. Rational products take an integer fast path when the
// common-denominator numerators fit in machine words.
QMatrix operator*(const QMatrix& a, const QMatrix& b);
GMatrix operator*(const GMatrix& a, const GMatrix& b);

template <class F>
Vector<F> operator*(const Matrix<F>& a, const Vector<F>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("Matrix*Vector: shape mismatch");
    Vector<F> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        F acc;
        const auto row = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

GMatrix complexify(const QMatrix& m);
GVector complexify(const QVector& v);
QMatrix real_part(const GMatrix& m);
QMatrix imag_part(const GMatrix& m);
GMatrix conj(const GMatrix& m);
GMatrix adjoint(const GMatrix& m);
GVector conj(const GVector& v);

}  // namespace hodgeforge
