#ifndef SECANT_EXACT_RANDOM_HPP
#define SECANT_EXACT_RANDOM_HPP

#include <cstddef>
#include <cstdint>

#include "secant/exact/matrix.hpp"

namespace secant {

inline constexpr std::uint64_t kDefaultBound = 9;

/// splitmix64 finalizer over (seed, stream); used for every derived seed so
/// results never depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Integer entries uniform in [-bound, bound], drawn from std::mt19937_64
/// (whose output sequence is fixed by the standard) with rejection sampling
/// on the top of the 64-bit range, filled row-major. A skew draw fills the
/// strict upper triangle row-major and mirrors it with opposite sign.
RationalMatrix seeded_random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols,
                                    std::uint64_t bound, bool skew);

}  // namespace secant

#endif  // SECANT_EXACT_RANDOM_HPP
