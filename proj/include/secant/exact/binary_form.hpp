#ifndef SECANT_EXACT_BINARY_FORM_HPP
#define SECANT_EXACT_BINARY_FORM_HPP

#include <span>
#include <string>
#include <vector>

#include "secant/exact/multipoly.hpp"
#include "secant/exact/rational.hpp"

namespace secant {

/// A root (s : t) of a binary form, as a primitive integer pair.
struct BinaryRoot {
  Integer s;
  Integer t;
  friend bool operator==(const BinaryRoot&, const BinaryRoot&) = default;
};

/// Homogeneous polynomial in (s, t). Coefficient k multiplies s^(deg-k) t^k.
/// The zero form keeps a nominal degree and sets an explicit flag.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(zero(0)) {}
  explicit BinaryForm(std::vector<Rational> coefficients);

  static BinaryForm zero(int degree);
  static BinaryForm one();
  static BinaryForm linear(const Rational& s_coeff, const Rational& t_coeff);
  /// Converts a homogeneous polynomial in two variables (s = x0, t = x1).
  static BinaryForm from_poly(const MultiPoly& p, int degree);

  bool is_zero() const noexcept { return zero_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  Rational evaluate(const Rational& s, const Rational& t) const;
  /// Scaled so the first nonzero coefficient is 1.
  BinaryForm monic() const;
  /// Exponent of the largest power of t dividing the form.
  int t_multiplicity() const;

  MultiPoly to_poly() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const Rational& c);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.zero_ == b.zero_ && a.coefficients_ == b.coefficients_;
  }

  std::string to_string() const;

 private:
  BinaryForm(std::vector<Rational> coefficients, bool zero);

  std::vector<Rational> coefficients_;
  bool zero_ = true;
};

/// Monic gcd of all nonzero forms; zero forms are ignored and an all-zero
/// input yields a zero form. Throws EmptyInput.
BinaryForm binary_gcd(std::span<const BinaryForm> forms);

/// Exact quotient a / b; throws InvalidArgument if b does not divide a.
BinaryForm divide_exact(const BinaryForm& a, const BinaryForm& b);
bool divides(const BinaryForm& divisor, const BinaryForm& f);

/// Sylvester resultant; zero iff the forms share a projective root.
Rational resultant(const BinaryForm& a, const BinaryForm& b);

/// Every rational projective root, each once, (1 : 0) first then by value of
/// s/t. Uses Sturm isolation and a simplest-rational search, no factoring.
/// The zero form has no isolated roots and returns an empty list.
std::vector<BinaryRoot> rational_roots(const BinaryForm& f);

}  // namespace secant

#endif  // SECANT_EXACT_BINARY_FORM_HPP
