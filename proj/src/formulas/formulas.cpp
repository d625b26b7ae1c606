#include "secant/formulas.hpp"

#include "secant/error.hpp"

namespace secant::formulas {
namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }
Rational frac(long num, long den) { return make_rational(num, den); }

}  // namespace

Rational k_cubed(const ThreefoldInvariants& t) {
  const Rational d = q(t.d), pi = q(t.pi);
  return -5 * d * d + d * (2 * pi + 25) + 24 * (pi - 1) - 36 * q(t.chi_X) - 24 * q(t.chi_S);
}

Rational h_k_squared(const ThreefoldInvariants& t) {
  const Rational d = q(t.d), pi = q(t.pi);
  return d * (d + 1) / 2 - 9 * (pi - 1) + 6 * q(t.chi_X);
}

Rational quadruple_points(const ThreefoldInvariants& t) {
  const Rational d = q(t.d), pi = q(t.pi), cs = q(t.chi_S), cx = q(t.chi_X);
  const Rational d2 = d * d;
  return d2 * d2 / 24 - d2 * d / 4 + d2 / 2 * (frac(11, 12) - pi) +
         d * (frac(5, 2) * pi + 2 * cs - frac(9, 4)) + pi * pi / 2 - frac(7, 2) * pi + 6 * cx - 9 * cs + 3;
}

Rational four_secants_through_point(const SurfaceBasics& s) {
  const Rational d = q(s.d), pi = q(s.pi), chi = q(s.chi);
  return d * d * d / 6 - frac(3, 2) * d * d + d * (frac(16, 3) - pi) + 4 * pi + 2 * chi - 10;
}

Rational foursecant_scroll_degree_a1(const SurfaceBasics& s) {
  const Rational d = q(s.d), pi = q(s.pi), chi = q(s.chi);
  const Rational d2 = d * d;
  return d2 * d2 / 8 - frac(5, 4) * d2 * d + d2 * (frac(35, 8) - pi) + d * (7 * pi + 2 * chi - frac(33, 4)) +
         pi * pi / 2 - frac(25, 2) * pi - 9 * chi + 12;
}

Rational curve_foursecants_a2(std::int64_t degree, std::int64_t genus) {
  const Rational d = q(degree), pi = q(genus);
  const Rational d2 = d * d;
  return d2 * d2 / 12 - d2 * d + frac(53, 12) * d2 - frac(17, 2) * d + 6 - pi * d2 / 2 + frac(7, 2) * d * pi -
         frac(13, 2) * pi + pi * pi / 2;
}

Rational residual_4k(const SurfaceBasics& s) {
  const Rational d = q(s.d), pi = q(s.pi), chi = q(s.chi);
  const Rational d2 = d * d;
  return d2 * d2 / 8 - frac(23, 12) * d2 * d - d2 * (pi - frac(83, 8)) - d * (frac(355, 12) - 11 * pi - 2 * chi) +
         pi * pi / 2 - frac(57, 2) * pi - 17 * chi + 53;
}

namespace {

Rational triple_point_formula(const Rational& d, const Rational& k2, const Rational& c2, const Rational& hk) {
  return (d * (d * d - 12 * d + 44) + 4 * k2 - 2 * c2 - 3 * hk * (d - 8)) / 6;
}

}  // namespace

Rational apparent_triple_points(const SurfaceInvariants& s) {
  return triple_point_formula(q(s.d), q(s.k_squared), q(s.c2()), q(s.hk()));
}

Rational blowup_triple_points(const SurfaceInvariants& s) {
  return triple_point_formula(q(s.d - 1), q(s.k_squared - 1), q(s.c2() + 1), q(2 * s.pi - s.d - 1));
}

Rational surface_k_squared(const SurfaceBasics& s) {
  const Rational d = q(s.d);
  const Rational hk = q(2 * s.pi - 2 - s.d);
  return (d * d - 10 * d - 5 * hk + 12 * q(s.chi)) / 2;
}

Integer linear_focal_degree(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "linear congruences need n >= 3");
  return Integer((static_cast<long>(n) * n - 3L * n + 4) / 2);
}

Integer pfaffian_hypersurface_degree(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "linear congruences need n >= 3");
  if (n % 2 == 0) {
    throw Error(ErrorKind::EvenDimension,
                "n = " + std::to_string(n) + " is even: the skew combination has odd size and vanishing determinant");
  }
  return Integer((n + 1) / 2);
}

DegreeGenus determinantal_invariants(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "determinantal congruences need n >= 3");
  const Integer degree = binomial(n, 2);
  const Rational genus = 1 + make_rational(2 * n - 7, 3) * Rational(degree);
  return {degree, to_integer(genus)};
}

BlowupCenter blowup_center_invariants(int n) {
  if (n < 4) throw Error(ErrorKind::OutOfRange, "the blow-up center needs n >= 4");
  const Rational genus = make_rational(static_cast<long>(n) * (2 * n - 5) * (n + 1), 6) - 1;
  return {binomial(n + 1, 2), to_integer(genus), n - 4};
}

bool dgb_bound_check(int n, std::int64_t m, std::int64_t k) {
  if (n < 2 || m < 1 || k < 1) throw Error(ErrorKind::OutOfRange, "dgb bound needs n >= 2, m >= 1, k >= 1");
  const Rational lower = make_rational(n - 1, static_cast<long>(k));
  const Rational upper = Rational(static_cast<long>(n - 1) * (n - 1));
  const Rational mm = q(m);
  return lower < mm && mm < upper;
}

}  // namespace secant::formulas
