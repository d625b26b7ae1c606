#ifndef SECANT_EXACT_MATRIX_HPP
#define SECANT_EXACT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "secant/error.hpp"
#include "secant/exact/rational.hpp"

namespace secant {

/// Dense row-major matrix over any ring-like element type.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw Error(ErrorKind::ShapeMismatch, "matrix entry count does not match rows x cols");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(entries_).subspan(r * cols_, cols_);
  }
  const std::vector<T>& entries() const noexcept { return entries_; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using RationalMatrix = Matrix<Rational>;

}  // namespace secant

#endif  // SECANT_EXACT_MATRIX_HPP
