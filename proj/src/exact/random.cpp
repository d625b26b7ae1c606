#include "secant/exact/random.hpp"

#include <limits>
#include <random>

#include "secant/error.hpp"

namespace secant {
namespace {

long draw(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t range = 2 * bound + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x = engine();
  while (x > limit) x = engine();
  return static_cast<long>(x % range) - static_cast<long>(bound);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RationalMatrix seeded_random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols,
                                    std::uint64_t bound, bool skew) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be at least 1");
  if (skew && rows != cols) throw Error(ErrorKind::ShapeMismatch, "a skew matrix must be square");
  std::mt19937_64 engine(seed);
  RationalMatrix m(rows, cols, Rational(0));
  if (skew) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = i + 1; j < cols; ++j) {
        const Rational v(draw(engine, bound));
        m(i, j) = v;
        m(j, i) = -v;
      }
    return m;
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(draw(engine, bound));
  return m;
}

}  // namespace secant
