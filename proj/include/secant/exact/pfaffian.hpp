#ifndef SECANT_EXACT_PFAFFIAN_HPP
#define SECANT_EXACT_PFAFFIAN_HPP

#include "secant/exact/matrix.hpp"
#include "secant/exact/multipoly.hpp"

namespace secant {

using PolyMatrix = Matrix<MultiPoly>;

bool is_skew_symmetric(const PolyMatrix& m);

/// Pfaffian by recursive expansion along the first row, normalized so that
/// Pf([[0, 1], [-1, 0]]) = 1. Throws NotSkew / OddSize / ShapeMismatch.
MultiPoly pfaffian(const PolyMatrix& m);

/// Cofactor expansion memoized over column subsets (n * 2^n products).
/// `variables` fixes the ring of the 0x0 case.
MultiPoly determinant(const PolyMatrix& m, std::size_t variables);

}  // namespace secant

#endif  // SECANT_EXACT_PFAFFIAN_HPP
