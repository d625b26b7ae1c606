#ifndef SECANT_FORMULAS_HPP
#define SECANT_FORMULAS_HPP

#include <cstdint>

#include "secant/exact/rational.hpp"

// Closed-form enumerative formulas for codimension-two varieties. Everything
// evaluates over exact rationals; integrality is checked afterwards, never
// forced by rounding.
namespace secant::formulas {

/// Basic invariants of a threefold X in P^5 with general hyperplane section S.
struct ThreefoldInvariants {
  std::int64_t d = 1;
  std::int64_t pi = 0;
  std::int64_t chi_S = 0;
  std::int64_t chi_X = 0;
};

/// (d, pi, chi(O_S)) of a surface in P^4, enough for the 4-secant formulas.
struct SurfaceBasics {
  std::int64_t d = 1;
  std::int64_t pi = 0;
  std::int64_t chi = 0;
};

struct SurfaceInvariants {
  std::int64_t d = 1;
  std::int64_t pi = 0;
  std::int64_t chi = 0;
  std::int64_t k_squared = 0;

  std::int64_t hk() const { return 2 * pi - 2 - d; }
  std::int64_t c2() const { return 12 * chi - k_squared; }
  SurfaceBasics basics() const { return {d, pi, chi}; }
};

// Double point formulas of X and S.
Rational k_cubed(const ThreefoldInvariants& t);
Rational h_k_squared(const ThreefoldInvariants& t);

/// Apparent quadruple points q(X) of a smooth threefold of P^5.
Rational quadruple_points(const ThreefoldInvariants& t);

/// 4-secant lines of a non-scroll surface of P^4 through a general point of it.
Rational four_secants_through_point(const SurfaceBasics& s);

/// Degree of the hypersurface of 4-secant lines of S, i.e. a_1.
Rational foursecant_scroll_degree_a1(const SurfaceBasics& s);

/// 4-secant lines of the curve section in a general P^3, i.e. a_2.
Rational curve_foursecants_a2(std::int64_t d, std::int64_t pi);

/// 4h = 1 + a_1 rewritten in (d, pi, chi); zero when the constraint holds.
Rational residual_4k(const SurfaceBasics& s);

/// Triple point formula of the generic projection of S to P^3.
Rational apparent_triple_points(const SurfaceInvariants& s);

/// Triple point formula applied to Bl_P(S): d-1, c2+1, K^2-1, HK = 2pi-d-1.
Rational blowup_triple_points(const SurfaceInvariants& s);

/// K^2 forced by the double point formula of a smooth surface in P^4,
/// d^2 - 10d - 5HK - 2K^2 + 12chi = 0.
Rational surface_k_squared(const SurfaceBasics& s);

/// Degree of the focal locus of a general linear congruence, (n^2-3n+4)/2.
Integer linear_focal_degree(int n);

/// Degree (n+1)/2 of the Pfaffian hypersurface; throws EvenDimension for even n.
Integer pfaffian_hypersurface_degree(int n);

struct DegreeGenus {
  Integer degree;
  Integer genus;
};

/// Degree C(n,2) and sectional genus 1 + (2n-7)/3 C(n,2) of the degeneracy
/// locus of a general n x (n-1) matrix of linear forms.
DegreeGenus determinantal_invariants(int n);

struct BlowupCenter {
  Integer degree;
  Integer genus;
  int dimension;  // n - 4: points for n = 4, a curve for n = 5
};

/// Center of the adjunction blow-up of P^(n-2): C(n+1,2) and n(2n-5)(n+1)/6 - 1.
BlowupCenter blowup_center_invariants(int n);

/// (n-1)/k < m < (n-1)^2.
bool dgb_bound_check(int n, std::int64_t m, std::int64_t k);

}  // namespace secant::formulas

#endif  // SECANT_FORMULAS_HPP
