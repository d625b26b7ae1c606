#include "secant/exact/linear_algebra.hpp"

#include <utility>

#include "secant/error.hpp"

namespace secant {
namespace {

using IntegerMatrix = Matrix<Integer>;

IntegerMatrix scale_rows_to_integers(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (const auto& q : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out(r, c) = q.get_num() * (lcm / q.get_den());
    }
  }
  return out;
}

struct Echelon {
  IntegerMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column of echelon row i
  int swaps = 0;
};

// Rectangular Bareiss elimination. After step k every entry below the pivot
// rows is a (k+1)-minor of the input, so the division by the previous pivot
// is exact.
Echelon bareiss(IntegerMatrix a) {
  Echelon e;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
      ++e.swaps;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

}  // namespace

RankKernel rank_and_kernel(const RationalMatrix& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyInput, "rank_and_kernel needs a nonempty matrix");
  Echelon e = bareiss(scale_rows_to_integers(m));
  RankKernel out;
  out.rank = e.pivots.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t k = out.rank; k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rational sum = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j] != 0) sum += Rational(e.rows(k, j)) * x[j];
      }
      x[pc] = -sum / Rational(e.rows(k, pc));
    }
    out.kernel.push_back(to_rationals(primitive_integer_vector(x)));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return bareiss(scale_rows_to_integers(m)).pivots.size();
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (const auto& q : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    scale *= lcm;
  }
  Echelon e = bareiss(scale_rows_to_integers(m));
  if (e.pivots.size() < m.rows()) return 0;
  Rational det(e.rows(m.rows() - 1, m.cols() - 1));
  if (e.swaps % 2 != 0) det = -det;
  return det / Rational(scale);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rational> apply(const RationalMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Rational bilinear(std::span<const Rational> x, const RationalMatrix& m, std::span<const Rational> y) {
  if (x.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "bilinear form shape mismatch");
  const auto my = apply(m, y);
  Rational out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * my[i];
  return out;
}

bool is_skew_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace secant
