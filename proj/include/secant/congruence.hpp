#ifndef SECANT_CONGRUENCE_HPP
#define SECANT_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "secant/exact.hpp"

namespace secant::congruence {

/// A point of P^n in canonical form: primitive integer coordinates whose
/// first nonzero entry is positive.
class ProjPoint {
 public:
  explicit ProjPoint(std::span<const Rational> coords);
  explicit ProjPoint(std::span<const Integer> coords);
  ProjPoint(std::initializer_list<long> coords);

  int ambient_dimension() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  std::vector<Rational> rationals() const { return to_rationals(coords_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  std::string to_string() const;  // "(1:0:0:1)"

 private:
  std::vector<Integer> coords_;
};

/// The line through two distinct points, parametrized as s*p0 + t*p1.
class ProjLine {
 public:
  ProjLine(ProjPoint p0, ProjPoint p1);

  const ProjPoint& p0() const noexcept { return p0_; }
  const ProjPoint& p1() const noexcept { return p1_; }
  int ambient_dimension() const noexcept { return p0_.ambient_dimension(); }

  std::vector<Rational> point_at(const Rational& s, const Rational& t) const;
  /// p0 ^ p1 in the order (0,1), (0,2), ..., (n-1,n), made primitive.
  std::vector<Integer> plucker() const;
  bool contains(const ProjPoint& p) const;
  /// Same parametrization with p0 and p1 exchanged.
  ProjLine swapped() const { return ProjLine(p1_, p0_); }

  /// Equality of lines (not of parametrizations).
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.plucker() == b.plucker(); }
  std::string to_string() const;

 private:
  ProjPoint p0_;
  ProjPoint p1_;
};

/// n-1 skew (n+1)x(n+1) matrices; the lines through P are cut out by
/// tP A_i v = 0.
class LinearCongruence {
 public:
  /// Validates shapes and skew-symmetry and finds a genericity witness.
  static LinearCongruence from_matrices(int n, std::vector<RationalMatrix> matrices);

  int n() const noexcept { return n_; }
  const std::vector<RationalMatrix>& matrices() const noexcept { return matrices_; }
  const ProjPoint& witness() const noexcept { return witness_; }

  /// The (n+1) x (n-1) matrix whose columns are A_i P.
  RationalMatrix focal_matrix(std::span<const Rational> point) const;

 private:
  LinearCongruence(int n, std::vector<RationalMatrix> matrices, ProjPoint witness);

  int n_;
  std::vector<RationalMatrix> matrices_;
  ProjPoint witness_;
};

/// An n x (n-1) matrix of linear forms on P^n, entry (i, j) = sum_k c_ijk x_k.
class DeterminantalCongruence {
 public:
  /// `coefficients` is indexed ((i * (n-1)) + j) * (n+1) + k.
  static DeterminantalCongruence from_coefficients(int n, std::vector<Rational> coefficients);
  /// Rows (x0, x1), (x1, x2), (x2, x3): the secant lines of the twisted cubic.
  static DeterminantalCongruence twisted_cubic();

  int n() const noexcept { return n_; }
  int rows() const noexcept { return n_; }
  int cols() const noexcept { return n_ - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  const Rational& coefficient(int i, int j, int k) const;
  const ProjPoint& witness() const noexcept { return witness_; }

  /// A(P), an n x (n-1) rational matrix.
  RationalMatrix evaluate(std::span<const Rational> point) const;

 private:
  DeterminantalCongruence(int n, std::vector<Rational> coefficients, ProjPoint witness);

  int n_;
  std::vector<Rational> coefficients_;
  ProjPoint witness_;
};

using Congruence = std::variant<LinearCongruence, DeterminantalCongruence>;

int ambient_dimension(const Congruence& c);
std::string_view kind_name(const Congruence& c);

inline constexpr int kMaxGenericityAttempts = 32;

LinearCongruence random_linear_congruence(int n, std::uint64_t seed, std::uint64_t bound = kDefaultBound);
DeterminantalCongruence random_determinantal_congruence(int n, std::uint64_t seed,
                                                        std::uint64_t bound = kDefaultBound);

/// The unique line of the congruence through P. Throws KernelTooBig when P is
/// a fundamental point, RankDeficient on any other rank loss.
ProjLine line_through_point(const LinearCongruence& c, const ProjPoint& p);

/// tp0 A_i p1 for every i; all zero iff the line lies in each hyperplane
/// section of G(1,n) defining the congruence.
std::vector<Rational> membership_residuals(const LinearCongruence& c, const ProjLine& line);

struct DeterminantalLine {
  ProjLine line;
  /// lambda with sum_i lambda_i a_ij(P) = 0 for every column j, primitive.
  std::vector<Integer> row_combination;
};

/// Throws SolutionSpace when the lambda-space is not a single point and
/// RankDeficient when the combined row does not cut out a line.
DeterminantalLine line_through_point(const DeterminantalCongruence& c, const ProjPoint& p);

ProjLine line_through_point(const Congruence& c, const ProjPoint& p);

/// Restricted combined row sum_i lambda_i a_ij(s p0 + t p1), one linear form per column.
std::vector<BinaryForm> combined_row_on_line(const DeterminantalCongruence& c,
                                             std::span<const Integer> row_combination, const ProjLine& line);

struct FocalSliceReport {
  std::vector<BinaryForm> minors;
  /// Degree of each restricted maximal minor, -1 when it vanishes identically.
  std::vector<int> minor_degrees;
  BinaryForm gcd;
  /// -1 on a focal line.
  int gcd_degree = 0;
  /// Every restricted minor vanishes: the whole line is focal.
  bool focal_line = false;
};

/// Maximal minors of the defining matrix restricted to s p0 + t p1 and their
/// gcd. Linear: (n+1) x (n-1) columns A_i P(s,t), minors listed by the pair
/// of deleted rows in lexicographic order. Determinantal: A(P(s,t)), minors
/// listed by deleted row.
FocalSliceReport focal_points_on_line(const LinearCongruence& c, const ProjLine& line);
FocalSliceReport focal_points_on_line(const DeterminantalCongruence& c, const ProjLine& line);
FocalSliceReport focal_points_on_line(const Congruence& c, const ProjLine& line);

bool is_focal_point(const LinearCongruence& c, const ProjPoint& p);
bool is_focal_point(const DeterminantalCongruence& c, const ProjPoint& p);
bool is_focal_point(const Congruence& c, const ProjPoint& p);

/// Points of the line at the rational roots of the focal gcd.
std::vector<ProjPoint> rational_focal_points(const FocalSliceReport& report, const ProjLine& line);

/// Pf(sum_i lambda_i A_i) in lambda_1..lambda_{n-1}; odd n only, asserts
/// homogeneity of degree (n+1)/2. Throws EvenDimension for even n.
MultiPoly pfaffian_polynomial(const LinearCongruence& c);

/// det(sum_i lambda_i A_i); identically zero when n is even.
MultiPoly skew_combination_determinant(const LinearCongruence& c);

/// sum_i lambda_i A_i as a matrix of linear forms in n-1 variables.
PolyMatrix skew_combination(const LinearCongruence& c);

/// Deterministic probe point for trial `trial`: integer coordinates in
/// [-bound, bound] from derive_seed(seed, trial), never the zero vector.
ProjPoint probe_point(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t bound = kDefaultBound);

struct ProbeResult {
  ProjPoint point;
  bool focal = false;      // skipped: the probe is a fundamental point
  bool success = false;    // a unique line, all postconditions exact
  std::string diagnostic;  // empty on success
  std::optional<ProjLine> line;
};

struct OrderReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t focal_probes = 0;
  std::vector<ProbeResult> probes;

  /// Every non-focal probe produced exactly one line.
  bool pass() const { return successes + focal_probes == trials; }
};

/// Runs line_through_point at `trials` probe points. Throws InvalidArgument
/// for trials = 0.
OrderReport order_check(const Congruence& c, std::size_t trials, std::uint64_t seed);

}  // namespace secant::congruence

#endif  // SECANT_CONGRUENCE_HPP
