#include "secant/exact/pfaffian.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "secant/error.hpp"

namespace secant {
namespace {

MultiPoly pfaffian_of(const PolyMatrix& m, std::vector<std::size_t>& indices, std::size_t variables) {
  if (indices.empty()) return MultiPoly::constant(variables, 1);
  const std::size_t first = indices.front();
  MultiPoly out(variables);
  // Expansion along the first remaining row: sum_j (-1)^(j+1) a_{1j} Pf(A without rows/cols 1, j),
  // with j counted from 1 among the remaining indices after `first`.
  for (std::size_t pos = 1; pos < indices.size(); ++pos) {
    const std::size_t partner = indices[pos];
    const MultiPoly& entry = m(first, partner);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(indices.size() - 2);
    for (std::size_t k = 1; k < indices.size(); ++k)
      if (k != pos) rest.push_back(indices[k]);
    MultiPoly term = entry * pfaffian_of(m, rest, variables);
    if (pos % 2 == 1) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace

bool is_skew_symmetric(const PolyMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

MultiPoly pfaffian(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "Pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw Error(ErrorKind::OddSize, "Pfaffian needs an even-size matrix");
  if (!is_skew_symmetric(m)) throw Error(ErrorKind::NotSkew, "Pfaffian needs a skew-symmetric matrix");
  const std::size_t variables = m.rows() == 0 ? 0 : m(0, 0).variable_count();
  std::vector<std::size_t> indices(m.rows());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  return pfaffian_of(m, indices, variables);
}

MultiPoly determinant(const PolyMatrix& m, std::size_t variables) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw Error(ErrorKind::OutOfRange, "polynomial determinant limited to 20x20");
  if (n == 0) return MultiPoly::constant(variables, 1);
  // minor[mask] = determinant of rows popcount(mask)..n-1 against the columns
  // not in mask (the used columns are exactly `mask`).
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::optional<MultiPoly>> minor(std::size_t{1} << n);
  minor[full] = MultiPoly::constant(variables, 1);
  for (std::uint32_t mask = full; mask-- > 0;) {
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    MultiPoly acc(variables);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::uint32_t{1} << c)) continue;
      const auto& rest = minor[mask | (std::uint32_t{1} << c)];
      if (!m(row, c).is_zero() && rest && !rest->is_zero()) {
        MultiPoly term = m(row, c) * *rest;
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return *minor[0];
}

}  // namespace secant
