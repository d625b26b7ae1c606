#ifndef SECANT_SCHUBERT_HPP
#define SECANT_SCHUBERT_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secant/exact/rational.hpp"

namespace secant::schubert {

/// Index pair (a, b) of the special Schubert cycle sigma_{a,b} on G(1, n),
/// n - 1 >= a >= b >= 0.
struct CycleIndex {
  int a = 0;
  int b = 0;
  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
};

/// Orders a descending, then b descending.
struct CanonicalOrder {
  bool operator()(const CycleIndex& x, const CycleIndex& y) const {
    return x.a != y.a ? x.a > y.a : x.b > y.b;
  }
};

/// Integer combination of special Schubert cycles on G(1, n).
class SchubertClass {
 public:
  using Terms = std::map<CycleIndex, Integer, CanonicalOrder>;

  explicit SchubertClass(int n);
  static SchubertClass cycle(int n, int a, int b, const Integer& coefficient = 1);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(int a, int b) const;
  void add(int a, int b, const Integer& coefficient);

  /// True iff every stored pair has a + b = codim (the zero class is
  /// homogeneous of every codimension).
  bool is_homogeneous(int codim) const;

  SchubertClass& operator+=(const SchubertClass& other);
  friend SchubertClass operator+(SchubertClass x, const SchubertClass& y) { return x += y; }
  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  /// "σ[a,b]" terms, e.g. "σ[3,0] + 2σ[2,1]"; "0" for the zero class.
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// The (nu+1)-degree (a_0, ..., a_nu), nu = floor((n-1)/2).
class Multidegree {
 public:
  Multidegree(int n, std::vector<Integer> degrees);

  int n() const noexcept { return n_; }
  int nu() const noexcept { return (n_ - 1) / 2; }
  const std::vector<Integer>& degrees() const noexcept { return degrees_; }
  const Integer& order() const { return degrees_.front(); }
  bool is_first_order() const { return degrees_.front() == 1; }

  /// Class sum_i a_i sigma_{n-1-i, i}.
  SchubertClass to_class() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

  /// "(1,3,2)".
  std::string to_string() const;

 private:
  int n_;
  std::vector<Integer> degrees_;
};

/// Pieri: sigma_1 * sigma_{a,b} = sigma_{a+1,b} [a+1 <= n-1] + sigma_{a,b+1} [b+1 <= a].
SchubertClass pieri_sigma1(const SchubertClass& c);

/// sum_{i=0}^{floor(l/2)} (C(l-1,i) - C(l-1,i-2)) sigma_{l-i,i}; valid for 1 <= l <= n-1.
SchubertClass sigma1_power_closed(int n, int l);

/// l-fold Pieri product starting from sigma_{0,0}; valid for every l >= 0.
SchubertClass sigma1_power_iterative(int n, int l);

Multidegree multidegree_of(const SchubertClass& c);

/// sum_i a_i (C(n-2,i) - C(n-2,i-2)), the self-dual pairing of [B] with sigma_1^(n-1).
Integer plucker_degree(const Multidegree& m);

/// Coefficient of sigma_{n-1,n-1} in [B] * sigma_1^(n-1) by repeated Pieri.
Integer plucker_degree_by_pieri(const Multidegree& m);

/// sum_i a_i C(n,i)(n-2i+1)/(n-i+1). Kept only to report how it differs from
/// plucker_degree (23 instead of 14 for (1,3,2), n = 5).
Rational plucker_degree_binomial_variant(const Multidegree& m);

/// a_i = C(n-2,i) - C(n-2,i-2) for the intersection of G(1,n) with n-1 general hyperplanes.
Multidegree linear_congruence_multidegree(int n);

/// C(2n-2, n) / (n-1).
Integer grassmannian_degree(int n);

}  // namespace secant::schubert

#endif  // SECANT_SCHUBERT_HPP
