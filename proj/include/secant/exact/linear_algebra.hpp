#ifndef SECANT_EXACT_LINEAR_ALGEBRA_HPP
#define SECANT_EXACT_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "secant/exact/matrix.hpp"

namespace secant {

struct RankKernel {
  std::size_t rank = 0;
  /// One primitive integer vector per free column; for a fixed row space the
  /// basis is unique (it is read off the reduced echelon form).
  std::vector<std::vector<Rational>> kernel;
};

/// Fraction-free (Bareiss) elimination. Rows are first scaled to integers,
/// so every intermediate value is an exact integer minor.
RankKernel rank_and_kernel(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Bareiss determinant; the 0x0 determinant is 1.
Rational determinant(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> apply(const RationalMatrix& m, std::span<const Rational> v);
Rational bilinear(std::span<const Rational> x, const RationalMatrix& m, std::span<const Rational> y);

bool is_skew_symmetric(const RationalMatrix& m);
bool is_zero(std::span<const Rational> v);

}  // namespace secant

#endif  // SECANT_EXACT_LINEAR_ALGEBRA_HPP
