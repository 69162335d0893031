#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "terracini/errors.hpp"

namespace terracini {

// Dense row-major matrix over an arbitrary element type. All matrices in
// this library are desk-scale (a few hundred rows/columns at most), so
// dense storage is the only representation.
template <class Elem>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_, rows_ * cols_ ? a_[0] : Elem());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Copy of the first `count` rows.
    Matrix top_rows(std::size_t count) const {
        Matrix t(count, cols_, rows_ * cols_ ? a_[0] : Elem());
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(i, j) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace terracini
