#include "secant/catalog.hpp"

#include "secant/error.hpp"
#include "secant/formulas.hpp"

namespace secant::catalog {
namespace {

namespace f = secant::formulas;

void require_shape(const VarietyRecord& r, int dim) {
  if (r.dim != dim || r.n != dim + 2) {
    throw Error(ErrorKind::Schema, r.name + ": expected dim " + std::to_string(dim) + " in P^" +
                                       std::to_string(dim + 2));
  }
}

std::int64_t field(const VarietyRecord& r, const std::optional<std::int64_t>& v, const char* column) {
  if (!v) throw Error(ErrorKind::MissingField, r.name + ": missing " + column);
  return *v;
}

Verdict equals(const std::string& name, const Rational& value, long expected) {
  const bool ok = value == expected;
  return {name, ok, name + " = " + to_string(value) + (ok ? "" : " (expected " + std::to_string(expected) + ")")};
}

Verdict bound(int n, std::int64_t d, std::int64_t k) {
  const bool ok = f::dgb_bound_check(n, d, k);
  const std::string range = std::to_string(n - 1) + "/" + std::to_string(k) + " < d < " + std::to_string((n - 1) * (n - 1));
  return {"bound", ok, "d = " + std::to_string(d) + (ok ? " satisfies " : " violates ") + range};
}

void finish(ClassificationEntry& e) {
  e.pass = true;
  for (const auto& v : e.verdicts) e.pass = e.pass && v.pass;
}

ClassificationEntry threefold(const VarietyRecord& r, std::int64_t k) {
  require_shape(r, 3);
  const f::ThreefoldInvariants t{r.d, r.pi, field(r, r.chi_S, "chi_S"), field(r, r.chi_X, "chi_X")};
  const f::SurfaceBasics s{t.d, t.pi, t.chi_S};
  ClassificationEntry e{r.name, 3, {}, {}, false};
  e.computed = {{"q", f::quadruple_points(t)},
                {"a1", f::foursecant_scroll_degree_a1(s)},
                {"a2", f::curve_foursecants_a2(t.d, t.pi)},
                {"residual", f::residual_4k(s)}};
  e.verdicts.push_back(equals("q", e.computed[0].second, 1));
  e.verdicts.push_back(equals("residual", e.computed[3].second, 0));
  e.verdicts.push_back(bound(r.n, r.d, k));
  std::string fractional;
  for (const auto& [key, value] : e.computed)
    if (!is_integer(value)) fractional += (fractional.empty() ? "" : ", ") + key + " = " + to_string(value);
  e.verdicts.push_back({"integrality", fractional.empty(), fractional.empty() ? "all integral" : fractional});
  finish(e);
  return e;
}

ClassificationEntry surface(const VarietyRecord& r) {
  require_shape(r, 2);
  const f::SurfaceInvariants s{r.d, r.pi, field(r, r.chi_X, "chi"), field(r, r.k_squared, "K2")};
  if (!r.scroll) throw Error(ErrorKind::MissingField, r.name + ": missing scroll");
  ClassificationEntry e{r.name, 2, {}, {}, false};
  e.computed = {{"triple", f::apparent_triple_points(s)}, {"h", f::four_secants_through_point(s.basics())}};
  e.verdicts.push_back(equals("triple", e.computed[0].second, 1));
  const bool window = r.d >= 4 && r.d <= 8;
  e.verdicts.push_back({"degree_window", window, "d = " + std::to_string(r.d) + (window ? " in" : " outside") + " [4,8]"});
  e.verdicts.push_back({"not_scroll", !*r.scroll, *r.scroll ? "scroll" : "not a scroll"});
  finish(e);
  return e;
}

ClassificationEntry curve(const VarietyRecord& r, std::int64_t k) {
  require_shape(r, 1);
  ClassificationEntry e{r.name, 1, {}, {}, false};
  const Rational doubles = Rational((r.d - 1) * (r.d - 2) / 2 - r.pi);
  e.computed = {{"double", doubles}};
  e.verdicts.push_back(equals("double", doubles, 1));
  e.verdicts.push_back(bound(r.n, r.d, k));
  finish(e);
  return e;
}

void require_multiplicity(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "multiplicity must be at least 1");
}

}  // namespace

std::vector<std::string> ClassificationEntry::reasons() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (!v.pass) out.push_back(v.detail);
  return out;
}

const Rational* ClassificationEntry::value(std::string_view key) const {
  for (const auto& [k, v] : computed)
    if (k == key) return &v;
  return nullptr;
}

ClassificationReport classify_threefolds(const std::vector<VarietyRecord>& records, std::int64_t multiplicity) {
  require_multiplicity(multiplicity);
  ClassificationReport out;
  for (const auto& r : records) out.push_back(threefold(r, multiplicity));
  return out;
}

ClassificationReport classify_surfaces(const std::vector<VarietyRecord>& records) {
  ClassificationReport out;
  for (const auto& r : records) out.push_back(surface(r));
  return out;
}

ClassificationReport classify_curves(const std::vector<VarietyRecord>& records, std::int64_t multiplicity) {
  require_multiplicity(multiplicity);
  ClassificationReport out;
  for (const auto& r : records) out.push_back(curve(r, multiplicity));
  return out;
}

ClassificationReport classify(const std::vector<VarietyRecord>& records, std::int64_t multiplicity) {
  require_multiplicity(multiplicity);
  ClassificationReport out;
  for (const auto& r : records) {
    switch (r.dim) {
      case 3: out.push_back(threefold(r, multiplicity)); break;
      case 2: out.push_back(surface(r)); break;
      case 1: out.push_back(curve(r, multiplicity)); break;
      default: throw Error(ErrorKind::Schema, r.name + ": unsupported dimension " + std::to_string(r.dim));
    }
  }
  return out;
}

std::vector<Survivor> scan_exclusion(std::int64_t d, std::int64_t pi_min, std::int64_t pi_max, std::int64_t chi_min,
                                     std::int64_t chi_max) {
  if (d < 1) throw Error(ErrorKind::OutOfRange, "degree must be positive");
  if (pi_min > pi_max || chi_min > chi_max) throw Error(ErrorKind::EmptyInput, "empty scan range");
  std::vector<Survivor> out;
  for (std::int64_t pi = pi_min; pi <= pi_max; ++pi) {
    for (std::int64_t chi_S = chi_min; chi_S <= chi_max; ++chi_S) {
      if (f::residual_4k({d, pi, chi_S}) != 0) continue;
      // q is affine in chi_X.
      const Rational q0 = f::quadruple_points({d, pi, chi_S, 0});
      const Rational slope = f::quadruple_points({d, pi, chi_S, 1}) - q0;
      if (slope == 0) continue;
      const Rational chi_X = (1 - q0) / slope;
      if (!is_integer(chi_X) || chi_X < chi_min || chi_X > chi_max) continue;
      const Survivor s{pi, chi_S, to_integer(chi_X).get_si()};
      if (f::quadruple_points({d, pi, chi_S, s.chi_X}) != 1) throw std::logic_error("scan_exclusion: q != 1 survivor");
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace secant::catalog
