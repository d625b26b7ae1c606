#ifndef SECANT_EXACT_MULTIPOLY_HPP
#define SECANT_EXACT_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "secant/exact/rational.hpp"

namespace secant {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexDescending>;

  explicit MultiPoly(std::size_t variables = 0) : variables_(variables) {}

  static MultiPoly constant(std::size_t variables, const Rational& c);
  static MultiPoly variable(std::size_t variables, std::size_t index);

  std::size_t variable_count() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  /// Variables print as x0, x1, ... unless names are supplied.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t variables_;
  Terms terms_;
};

}  // namespace secant

#endif  // SECANT_EXACT_MULTIPOLY_HPP
