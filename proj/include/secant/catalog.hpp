#ifndef SECANT_CATALOG_HPP
#define SECANT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/exact/rational.hpp"

namespace secant::catalog {

/// One row of a catalog file. For surfaces chi(O_S) lives in chi_X.
struct VarietyRecord {
  std::string name;
  int n = 0;
  int dim = 0;
  std::int64_t d = 0;
  std::int64_t pi = 0;
  std::optional<std::int64_t> chi_S;
  std::optional<std::int64_t> chi_X;
  std::optional<std::int64_t> k_squared;
  std::optional<bool> scroll;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
  friend bool operator==(const VarietyRecord&, const VarietyRecord&) = default;
};

inline constexpr std::string_view kCatalogHeader = "name\tn\tdim\td\tpi\tchi_S\tchi_X\tK2\tscroll\ttags";

/// Tab-separated rows under kCatalogHeader; blank cells for inapplicable
/// fields, tags comma-separated. `source` prefixes diagnostics.
std::vector<VarietyRecord> parse_catalog(std::string_view text, const std::string& source = "<catalog>");
std::vector<VarietyRecord> load_catalog(const std::string& path);
std::string format_catalog(const std::vector<VarietyRecord>& records);
void save_catalog(const std::vector<VarietyRecord>& records, const std::string& path);

/// The three threefolds, two surfaces and one curve with one apparent
/// (n-1)-tuple point, plus two complete intersections that fail.
const std::vector<VarietyRecord>& builtin_catalog();
std::string_view builtin_catalog_tsv();

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ClassificationEntry {
  std::string name;
  int dim = 0;
  std::vector<std::pair<std::string, Rational>> computed;
  std::vector<Verdict> verdicts;
  bool pass = false;

  std::vector<std::string> reasons() const;  // details of failed verdicts
  const Rational* value(std::string_view key) const;
};

using ClassificationReport = std::vector<ClassificationEntry>;

/// q = 1, residual = 0, (n-1)/k < d < (n-1)^2 and integral q, a1, a2, residual.
ClassificationReport classify_threefolds(const std::vector<VarietyRecord>& records, std::int64_t multiplicity = 1);
/// One apparent triple point, 4 <= d <= 8, not a scroll.
ClassificationReport classify_surfaces(const std::vector<VarietyRecord>& records);
/// Degree bound and one apparent double point (d-1)(d-2)/2 - pi.
ClassificationReport classify_curves(const std::vector<VarietyRecord>& records, std::int64_t multiplicity = 1);
/// Dispatches each record on its dimension; output keeps input order.
ClassificationReport classify(const std::vector<VarietyRecord>& records, std::int64_t multiplicity = 1);

struct Survivor {
  std::int64_t pi = 0;
  std::int64_t chi_S = 0;
  std::int64_t chi_X = 0;
  friend bool operator==(const Survivor&, const Survivor&) = default;
};

/// Integer (pi, chi_S) in range with q(d, pi, chi_S, chi_X) = 1 for an
/// integral chi_X in the chi range, and residual_4k(d, pi, chi_S) = 0.
std::vector<Survivor> scan_exclusion(std::int64_t d, std::int64_t pi_min, std::int64_t pi_max, std::int64_t chi_min,
                                     std::int64_t chi_max);

/// JSON array of {name, verdicts{...}, computed{...}, pass}.
std::string report_json(const ClassificationReport& report);

}  // namespace secant::catalog

#endif  // SECANT_CATALOG_HPP
