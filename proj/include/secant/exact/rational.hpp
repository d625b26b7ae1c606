#ifndef SECANT_EXACT_RATIONAL_HPP
#define SECANT_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace secant {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // throws NonIntegral

/// Prints "p/q", or just "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// C(n, k) with C(n, k) = 0 for k < 0, k > n or n < 0.
Integer binomial(long n, long k);

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. The zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

std::vector<Rational> to_rationals(std::span<const Integer> v);

}  // namespace secant

#endif  // SECANT_EXACT_RATIONAL_HPP
