#ifndef SECANT_TESTS_ORACLES_HPP
#define SECANT_TESTS_ORACLES_HPP

// Independent reference computations used by the tests. None of these call
// into the library's algorithms: determinants come from the Leibniz sum,
// Pfaffians from perfect matchings, formulas are evaluated in scaled 64-bit
// integer arithmetic, and Schubert coefficients from hook-length counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "secant/exact.hpp"

namespace oracle {

using secant::Integer;
using secant::Rational;
using secant::RationalMatrix;

inline Rational leibniz_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace detail {
inline void matchings(const RationalMatrix& m, std::vector<bool>& used, Rational& acc,
                      std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    // Sign of the permutation (i1 j1 i2 j2 ...).
    std::vector<std::size_t> word;
    for (auto [i, j] : pairs) {
      word.push_back(i);
      word.push_back(j);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < word.size(); ++a)
      for (std::size_t b = a + 1; b < word.size(); ++b)
        if (word[a] > word[b]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (auto [i, j] : pairs) term *= m(i, j);
    acc += term;
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    pairs.emplace_back(first, j);
    matchings(m, used, acc, pairs);
    pairs.pop_back();
    used[j] = false;
  }
  used[first] = false;
}
}  // namespace detail

/// Sum over perfect matchings of sign * prod a_{ij}.
inline Rational matching_pfaffian(const RationalMatrix& m) {
  std::vector<bool> used(m.rows(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Rational acc = 0;
  detail::matchings(m, used, acc, pairs);
  return acc;
}

// Formulas multiplied through by their denominators.

inline std::int64_t q_times_24(std::int64_t d, std::int64_t p, std::int64_t cs, std::int64_t cx) {
  return d * d * d * d - 6 * d * d * d + d * d * (11 - 12 * p) + d * (60 * p + 48 * cs - 54) + 12 * p * p - 84 * p +
         144 * cx - 216 * cs + 72;
}

inline std::int64_t h_times_6(std::int64_t d, std::int64_t p, std::int64_t c) {
  return d * d * d - 9 * d * d + d * (32 - 6 * p) + 24 * p + 12 * c - 60;
}

inline std::int64_t a1_times_8(std::int64_t d, std::int64_t p, std::int64_t c) {
  return d * d * d * d - 10 * d * d * d + d * d * (35 - 8 * p) + d * (56 * p + 16 * c - 66) + 4 * p * p - 100 * p -
         72 * c + 96;
}

inline std::int64_t a2_times_12(std::int64_t d, std::int64_t p) {
  return d * d * d * d - 12 * d * d * d + 53 * d * d - 102 * d + 72 - 6 * p * d * d + 42 * d * p - 78 * p + 6 * p * p;
}

inline std::int64_t residual_times_24(std::int64_t d, std::int64_t p, std::int64_t c) {
  return 3 * d * d * d * d - 46 * d * d * d - d * d * (24 * p - 249) - d * (710 - 264 * p - 48 * c) + 12 * p * p -
         684 * p - 408 * c + 1272;
}

inline std::int64_t triple_times_6(std::int64_t d, std::int64_t p, std::int64_t c, std::int64_t k2) {
  const std::int64_t hk = 2 * p - 2 - d;
  const std::int64_t c2 = 12 * c - k2;
  return d * (d * d - 12 * d + 44) + 4 * k2 - 2 * c2 - 3 * hk * (d - 8);
}

/// Standard Young tableaux of the two-row shape (a, b), by the hook formula.
inline Integer two_row_tableaux(int a, int b) {
  Integer num, den1, den2;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(a + b));
  mpz_fac_ui(den1.get_mpz_t(), static_cast<unsigned long>(a + 1));
  mpz_fac_ui(den2.get_mpz_t(), static_cast<unsigned long>(b));
  return num * (a - b + 1) / (den1 * den2);
}

/// Pieri by hand on a plain map, with the a <= n-1 truncation.
inline std::map<std::pair<int, int>, Integer> pieri_power(int n, int l) {
  std::map<std::pair<int, int>, Integer> c{{{0, 0}, 1}};
  for (int step = 0; step < l; ++step) {
    std::map<std::pair<int, int>, Integer> next;
    for (const auto& [ab, coeff] : c) {
      const auto [a, b] = ab;
      if (a + 1 <= n - 1) next[{a + 1, b}] += coeff;
      if (b + 1 <= a) next[{a, b + 1}] += coeff;
    }
    c = std::move(next);
  }
  return c;
}

inline Integer catalan(int k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  return c / (k + 1);
}

/// Roots p/q of f(x) = sum c_k x^k with |p|, q <= limit, by direct evaluation.
inline std::vector<Rational> small_rational_roots(const std::vector<Rational>& c, int limit) {
  std::vector<Rational> roots;
  for (int q = 1; q <= limit; ++q)
    for (int p = -limit; p <= limit; ++p) {
      Rational x(p, q);
      x.canonicalize();
      if (x.get_den() != q) continue;
      Rational v = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
      if (v == 0) roots.push_back(x);
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace oracle

#endif  // SECANT_TESTS_ORACLES_HPP
