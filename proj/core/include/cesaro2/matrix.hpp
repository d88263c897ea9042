#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cesaro2 {

/// Dense rectangular matrix over an exact scalar, row-major, immutable after
/// construction.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }
    template <class Gen>
        requires requires(Gen g) { { g(std::size_t{0}, std::size_t{0}) } -> std::convertible_to<T>; }
    Matrix(std::size_t rows, std::size_t cols, Gen&& gen) : rows_(rows), cols_(cols) {
        e_.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) e_.push_back(gen(i, j));
    }

    static Matrix identity(std::size_t n) {
        return Matrix(n, n, [](std::size_t i, std::size_t j) { return i == j ? T{1L} : T{}; });
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix: index out of range");
        return e_[i * cols_ + j];
    }
    const std::vector<T>& entries() const { return e_; }

    Matrix transpose() const {
        return Matrix(cols_, rows_, [this](std::size_t i, std::size_t j) { return at(j, i); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        return Matrix(a.rows_, b.cols_, [&](std::size_t i, std::size_t j) {
            T acc{};
            for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            return acc;
        });
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in sum");
        return Matrix(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return a.at(i, j) + b.at(i, j); });
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in difference");
        return Matrix(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return a.at(i, j) - b.at(i, j); });
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (!(a.e_[i] == b.e_[i])) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    /// Top-left k-by-k section.
    Matrix leading(std::size_t k) const {
        if (k > rows_ || k > cols_) throw std::out_of_range("Matrix: leading section too large");
        return Matrix(k, k, [this](std::size_t i, std::size_t j) { return at(i, j); });
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc{};
            for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
            out.push_back(acc);
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

}  // namespace cesaro2
