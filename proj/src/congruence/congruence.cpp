#include "secant/congruence.hpp"

#include <stdexcept>

namespace secant::congruence {
namespace {

// Fixed seed for the witness probes of explicitly supplied congruences.
constexpr std::uint64_t kWitnessSeed = 0x5ec47;
constexpr std::uint64_t kWitnessProbes = 4;

void require_point(int n, const ProjPoint& p) {
  if (p.ambient_dimension() != n) {
    throw Error(ErrorKind::ShapeMismatch, "point " + p.to_string() + " is not in P^" + std::to_string(n));
  }
}

void require_line(int n, const ProjLine& line) {
  if (line.ambient_dimension() != n) throw Error(ErrorKind::ShapeMismatch, "line is not in P^" + std::to_string(n));
}

ProjLine line_from_kernel(const std::vector<std::vector<Rational>>& kernel) {
  return ProjLine(ProjPoint(std::span<const Rational>(kernel[0])), ProjPoint(std::span<const Rational>(kernel[1])));
}

ProjLine linear_line(int n, const std::vector<RationalMatrix>& matrices, const ProjPoint& p) {
  require_point(n, p);
  const auto point = p.rationals();
  RationalMatrix conditions(matrices.size(), static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& a = matrices[i];
    for (std::size_t col = 0; col < a.cols(); ++col)
      for (std::size_t k = 0; k < a.rows(); ++k) conditions(i, col) += point[k] * a(k, col);
  }
  const RankKernel rk = rank_and_kernel(conditions);
  if (rk.kernel.size() > 2) {
    throw Error(ErrorKind::KernelTooBig, "P = " + p.to_string() + " is a fundamental point: " +
                                             std::to_string(rk.kernel.size() - 1) + "-dimensional family of lines");
  }
  if (rk.kernel.size() < 2) {
    throw Error(ErrorKind::RankDeficient, "conditions through " + p.to_string() + " do not cut out a line");
  }
  ProjLine line = line_from_kernel(rk.kernel);
  if (!line.contains(p)) throw std::logic_error("line_through_point: P is not on the returned line");
  const auto a = line.p0().rationals();
  const auto b = line.p1().rationals();
  for (const auto& m : matrices)
    if (bilinear(a, m, b) != 0) throw std::logic_error("line_through_point: nonzero membership residual");
  return line;
}

RationalMatrix evaluate_tensor(int n, const std::vector<Rational>& c, std::span<const Rational> point) {
  const auto rows = static_cast<std::size_t>(n);
  const auto cols = static_cast<std::size_t>(n - 1);
  const auto vars = static_cast<std::size_t>(n + 1);
  RationalMatrix out(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < vars; ++k) {
        const auto& coeff = c[(i * cols + j) * vars + k];
        if (coeff != 0) out(i, j) += coeff * point[k];
      }
  return out;
}

DeterminantalLine determinantal_line(int n, const std::vector<Rational>& c, const ProjPoint& p) {
  require_point(n, p);
  const RationalMatrix a = evaluate_tensor(n, c, p.rationals());
  const RankKernel lambda_space = rank_and_kernel(a.transpose());
  if (lambda_space.kernel.size() != 1) {
    throw Error(ErrorKind::SolutionSpace, "lambda-space through " + p.to_string() + " has dimension " +
                                              std::to_string(lambda_space.kernel.size()) + " instead of 1");
  }
  const auto& lambda = lambda_space.kernel[0];
  const auto cols = static_cast<std::size_t>(n - 1);
  const auto vars = static_cast<std::size_t>(n + 1);
  RationalMatrix forms(cols, vars, Rational(0));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < vars; ++k) forms(j, k) += lambda[i] * c[(i * cols + j) * vars + k];
  }
  const RankKernel rk = rank_and_kernel(forms);
  if (rk.rank != cols) {
    throw Error(ErrorKind::RankDeficient, "combined row through " + p.to_string() + " has rank " +
                                              std::to_string(rk.rank) + " < " + std::to_string(cols));
  }
  ProjLine line = line_from_kernel(rk.kernel);
  if (!line.contains(p)) throw std::logic_error("line_through_point: P is not on the returned line");
  std::vector<Integer> combination;
  for (const auto& q : lambda) combination.push_back(q.get_num());
  return {std::move(line), std::move(combination)};
}

FocalSliceReport slice_report(std::vector<BinaryForm> minors, int degree) {
  FocalSliceReport report;
  report.focal_line = true;
  for (const auto& m : minors) {
    report.minor_degrees.push_back(m.is_zero() ? -1 : degree);
    if (!m.is_zero()) report.focal_line = false;
  }
  report.gcd = binary_gcd(minors);
  report.gcd_degree = report.focal_line ? -1 : report.gcd.degree();
  report.minors = std::move(minors);
  return report;
}

BinaryForm minor_of(const Matrix<BinaryForm>& m, const std::vector<std::size_t>& rows) {
  PolyMatrix sub(rows.size(), m.cols(), MultiPoly(2));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) sub(r, c) = m(rows[r], c).to_poly();
  return BinaryForm::from_poly(determinant(sub, 2), static_cast<int>(m.cols()));
}

}  // namespace

LinearCongruence::LinearCongruence(int n, std::vector<RationalMatrix> matrices, ProjPoint witness)
    : n_(n), matrices_(std::move(matrices)), witness_(std::move(witness)) {}

LinearCongruence LinearCongruence::from_matrices(int n, std::vector<RationalMatrix> matrices) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "linear congruences need n >= 3");
  if (matrices.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::ShapeMismatch, "a linear congruence of P^" + std::to_string(n) + " needs " +
                                              std::to_string(n - 1) + " matrices");
  }
  const auto size = static_cast<std::size_t>(n + 1);
  for (const auto& m : matrices) {
    if (m.rows() != size || m.cols() != size)
      throw Error(ErrorKind::ShapeMismatch, "matrices must be " + std::to_string(size) + "x" + std::to_string(size));
    if (!is_skew_symmetric(m)) throw Error(ErrorKind::NotSkew, "linear congruence matrices must be skew-symmetric");
  }
  for (std::uint64_t k = 0; k < kWitnessProbes; ++k) {
    ProjPoint probe = probe_point(n, kWitnessSeed, k);
    try {
      linear_line(n, matrices, probe);
      return LinearCongruence(n, std::move(matrices), std::move(probe));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::NotGeneric, "no witness probe yields a unique line");
}

RationalMatrix LinearCongruence::focal_matrix(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(n_) + 1) throw Error(ErrorKind::ShapeMismatch, "point has wrong length");
  RationalMatrix out(static_cast<std::size_t>(n_) + 1, matrices_.size());
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const auto column = apply(matrices_[i], point);
    for (std::size_t j = 0; j < column.size(); ++j) out(j, i) = column[j];
  }
  return out;
}

DeterminantalCongruence::DeterminantalCongruence(int n, std::vector<Rational> coefficients, ProjPoint witness)
    : n_(n), coefficients_(std::move(coefficients)), witness_(std::move(witness)) {}

DeterminantalCongruence DeterminantalCongruence::from_coefficients(int n, std::vector<Rational> coefficients) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "determinantal congruences need n >= 3");
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n + 1);
  if (coefficients.size() != expected) {
    throw Error(ErrorKind::ShapeMismatch, "coefficient tensor needs " + std::to_string(expected) + " entries");
  }
  for (std::uint64_t k = 0; k < kWitnessProbes; ++k) {
    ProjPoint probe = probe_point(n, kWitnessSeed, k);
    try {
      determinantal_line(n, coefficients, probe);
      return DeterminantalCongruence(n, std::move(coefficients), std::move(probe));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::NotGeneric, "no witness probe yields a unique line");
}

DeterminantalCongruence DeterminantalCongruence::twisted_cubic() {
  // Row i is (x_i, x_{i+1}).
  std::vector<Rational> c(3 * 2 * 4, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) c[static_cast<std::size_t>((i * 2 + j) * 4 + i + j)] = 1;
  return from_coefficients(3, std::move(c));
}

const Rational& DeterminantalCongruence::coefficient(int i, int j, int k) const {
  return coefficients_[static_cast<std::size_t>((i * (n_ - 1) + j) * (n_ + 1) + k)];
}

RationalMatrix DeterminantalCongruence::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(n_) + 1) throw Error(ErrorKind::ShapeMismatch, "point has wrong length");
  return evaluate_tensor(n_, coefficients_, point);
}

int ambient_dimension(const Congruence& c) {
  return std::visit([](const auto& x) { return x.n(); }, c);
}

std::string_view kind_name(const Congruence& c) {
  return std::holds_alternative<LinearCongruence>(c) ? "linear" : "determinantal";
}

LinearCongruence random_linear_congruence(int n, std::uint64_t seed, std::uint64_t bound) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "linear congruences need n >= 3");
  for (int attempt = 0; attempt < kMaxGenericityAttempts; ++attempt) {
    const std::uint64_t draw = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    std::vector<RationalMatrix> matrices;
    for (int i = 0; i < n - 1; ++i) {
      matrices.push_back(seeded_random_matrix(derive_seed(draw, static_cast<std::uint64_t>(i)),
                                              static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1,
                                              bound, true));
    }
    try {
      return LinearCongruence::from_matrices(n, std::move(matrices));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGeneric) throw;
    }
  }
  throw Error(ErrorKind::GenericityExhausted, "no generic linear congruence in " +
                                                  std::to_string(kMaxGenericityAttempts) + " draws");
}

DeterminantalCongruence random_determinantal_congruence(int n, std::uint64_t seed, std::uint64_t bound) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "determinantal congruences need n >= 3");
  for (int attempt = 0; attempt < kMaxGenericityAttempts; ++attempt) {
    const std::uint64_t draw = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    const RationalMatrix flat = seeded_random_matrix(
        draw, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n + 1), bound,
        false);
    try {
      return DeterminantalCongruence::from_coefficients(n, flat.entries());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGeneric) throw;
    }
  }
  throw Error(ErrorKind::GenericityExhausted, "no generic determinantal congruence in " +
                                                  std::to_string(kMaxGenericityAttempts) + " draws");
}

ProjLine line_through_point(const LinearCongruence& c, const ProjPoint& p) {
  return linear_line(c.n(), c.matrices(), p);
}

DeterminantalLine line_through_point(const DeterminantalCongruence& c, const ProjPoint& p) {
  return determinantal_line(c.n(), c.coefficients(), p);
}

ProjLine line_through_point(const Congruence& c, const ProjPoint& p) {
  if (const auto* lin = std::get_if<LinearCongruence>(&c)) return line_through_point(*lin, p);
  return line_through_point(std::get<DeterminantalCongruence>(c), p).line;
}

std::vector<Rational> membership_residuals(const LinearCongruence& c, const ProjLine& line) {
  require_line(c.n(), line);
  const auto a = line.p0().rationals();
  const auto b = line.p1().rationals();
  std::vector<Rational> out;
  for (const auto& m : c.matrices()) out.push_back(bilinear(a, m, b));
  return out;
}

std::vector<BinaryForm> combined_row_on_line(const DeterminantalCongruence& c,
                                             std::span<const Integer> row_combination, const ProjLine& line) {
  require_line(c.n(), line);
  if (row_combination.size() != static_cast<std::size_t>(c.rows()))
    throw Error(ErrorKind::ShapeMismatch, "row combination has wrong length");
  const RationalMatrix a0 = c.evaluate(line.p0().rationals());
  const RationalMatrix a1 = c.evaluate(line.p1().rationals());
  std::vector<BinaryForm> out;
  for (int j = 0; j < c.cols(); ++j) {
    Rational s = 0, t = 0;
    for (int i = 0; i < c.rows(); ++i) {
      const Rational lambda(row_combination[static_cast<std::size_t>(i)]);
      s += lambda * a0(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      t += lambda * a1(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    out.push_back(BinaryForm::linear(s, t));
  }
  return out;
}

FocalSliceReport focal_points_on_line(const LinearCongruence& c, const ProjLine& line) {
  require_line(c.n(), line);
  const RationalMatrix f0 = c.focal_matrix(line.p0().rationals());
  const RationalMatrix f1 = c.focal_matrix(line.p1().rationals());
  Matrix<BinaryForm> restricted(f0.rows(), f0.cols());
  for (std::size_t r = 0; r < f0.rows(); ++r)
    for (std::size_t col = 0; col < f0.cols(); ++col) restricted(r, col) = BinaryForm::linear(f0(r, col), f1(r, col));
  std::vector<BinaryForm> minors;
  const std::size_t total = f0.rows();
  for (std::size_t drop1 = 0; drop1 < total; ++drop1)
    for (std::size_t drop2 = drop1 + 1; drop2 < total; ++drop2) {
      std::vector<std::size_t> keep;
      for (std::size_t r = 0; r < total; ++r)
        if (r != drop1 && r != drop2) keep.push_back(r);
      minors.push_back(minor_of(restricted, keep));
    }
  return slice_report(std::move(minors), c.n() - 1);
}

FocalSliceReport focal_points_on_line(const DeterminantalCongruence& c, const ProjLine& line) {
  require_line(c.n(), line);
  const RationalMatrix a0 = c.evaluate(line.p0().rationals());
  const RationalMatrix a1 = c.evaluate(line.p1().rationals());
  Matrix<BinaryForm> restricted(a0.rows(), a0.cols());
  for (std::size_t r = 0; r < a0.rows(); ++r)
    for (std::size_t col = 0; col < a0.cols(); ++col) restricted(r, col) = BinaryForm::linear(a0(r, col), a1(r, col));
  std::vector<BinaryForm> minors;
  for (std::size_t drop = 0; drop < a0.rows(); ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < a0.rows(); ++r)
      if (r != drop) keep.push_back(r);
    minors.push_back(minor_of(restricted, keep));
  }
  return slice_report(std::move(minors), c.n() - 1);
}

FocalSliceReport focal_points_on_line(const Congruence& c, const ProjLine& line) {
  return std::visit([&](const auto& x) { return focal_points_on_line(x, line); }, c);
}

bool is_focal_point(const LinearCongruence& c, const ProjPoint& p) {
  require_point(c.n(), p);
  return rank(c.focal_matrix(p.rationals())) <= static_cast<std::size_t>(c.n() - 2);
}

bool is_focal_point(const DeterminantalCongruence& c, const ProjPoint& p) {
  require_point(c.n(), p);
  return rank(c.evaluate(p.rationals())) <= static_cast<std::size_t>(c.n() - 2);
}

bool is_focal_point(const Congruence& c, const ProjPoint& p) {
  return std::visit([&](const auto& x) { return is_focal_point(x, p); }, c);
}

std::vector<ProjPoint> rational_focal_points(const FocalSliceReport& report, const ProjLine& line) {
  std::vector<ProjPoint> out;
  for (const auto& root : rational_roots(report.gcd)) {
    const auto coords = line.point_at(Rational(root.s), Rational(root.t));
    out.emplace_back(std::span<const Rational>(coords));
  }
  return out;
}

PolyMatrix skew_combination(const LinearCongruence& c) {
  const auto vars = c.matrices().size();
  const auto size = static_cast<std::size_t>(c.n()) + 1;
  PolyMatrix out(size, size, MultiPoly(vars));
  for (std::size_t i = 0; i < vars; ++i) {
    const MultiPoly lambda = MultiPoly::variable(vars, i);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t col = 0; col < size; ++col) {
        const auto& v = c.matrices()[i](r, col);
        if (v != 0) out(r, col) += lambda * v;
      }
  }
  return out;
}

MultiPoly pfaffian_polynomial(const LinearCongruence& c) {
  if (c.n() % 2 == 0) {
    throw Error(ErrorKind::EvenDimension, "n = " + std::to_string(c.n()) +
                                              " is even: the skew combination is singular of odd size");
  }
  MultiPoly pf = pfaffian(skew_combination(c));
  if (pf.is_zero()) throw Error(ErrorKind::NotGeneric, "the Pfaffian vanishes identically");
  if (!pf.is_homogeneous() || pf.total_degree() != (c.n() + 1) / 2) {
    throw std::logic_error("pfaffian_polynomial: expected a form of degree (n+1)/2");
  }
  return pf;
}

MultiPoly skew_combination_determinant(const LinearCongruence& c) {
  return determinant(skew_combination(c), c.matrices().size());
}

ProjPoint probe_point(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t bound) {
  const std::uint64_t base = derive_seed(seed, trial);
  for (std::uint64_t k = 0;; ++k) {
    const RationalMatrix draw =
        seeded_random_matrix(derive_seed(base, k), 1, static_cast<std::size_t>(n) + 1, bound, false);
    if (!is_zero(draw.row(0))) return ProjPoint(draw.row(0));
  }
}

OrderReport order_check(const Congruence& c, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "order_check needs at least one trial");
  const int n = ambient_dimension(c);
  OrderReport report;
  report.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ProbeResult probe{probe_point(n, seed, trial), false, false, {}, std::nullopt};
    if (is_focal_point(c, probe.point)) {
      probe.focal = true;
      ++report.focal_probes;
      report.probes.push_back(std::move(probe));
      continue;
    }
    try {
      if (const auto* lin = std::get_if<LinearCongruence>(&c)) {
        ProjLine line = line_through_point(*lin, probe.point);
        if (!is_zero(membership_residuals(*lin, line))) throw std::logic_error("nonzero membership residual");
        probe.line = std::move(line);
      } else {
        const auto& det = std::get<DeterminantalCongruence>(c);
        DeterminantalLine result = line_through_point(det, probe.point);
        for (const auto& form : combined_row_on_line(det, result.row_combination, result.line))
          if (!form.is_zero()) throw std::logic_error("combined row does not vanish on the line");
        probe.line = std::move(result.line);
      }
      if (!probe.line->contains(probe.point)) throw std::logic_error("probe point not on its line");
      probe.success = true;
      ++report.successes;
    } catch (const Error& e) {
      probe.diagnostic = e.what();
    } catch (const std::logic_error& e) {
      probe.diagnostic = e.what();
    }
    report.probes.push_back(std::move(probe));
  }
  return report;
}

}  // namespace secant::congruence
