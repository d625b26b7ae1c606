#include "secant/exact/rational.hpp"

#include <cctype>

#include "secant/error.hpp"

namespace secant {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorKind::Parse, "not a number: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorKind::Parse, "not a number: '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  return make_rational(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw Error(ErrorKind::NonIntegral, to_string(q) + " is not an integer");
  return q.get_num();
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer common_den = 1;
  for (const auto& q : v) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (common_den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (content == 0) return out;
  int sign = 0;
  for (const auto& z : out) {
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  }
  if (sign < 0) content = -content;
  for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::vector<Rational> to_rationals(std::span<const Integer> v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

}  // namespace secant
