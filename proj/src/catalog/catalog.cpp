#include "secant/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "secant/error.hpp"

namespace secant::catalog {
namespace {

constexpr std::string_view kBuiltin =
    "name\tn\tdim\td\tpi\tchi_S\tchi_X\tK2\tscroll\ttags\n"
    "palatini-scroll\t5\t3\t7\t4\t1\t1\t\t\tclassified,linear-congruence,rational\n"
    "k3-scroll\t5\t3\t9\t8\t2\t2\t\t\tclassified,non-rational\n"
    "bordiga-linked-threefold\t5\t3\t10\t11\t5\t1\t\t\tclassified,determinantal,rational\n"
    "veronese-surface\t4\t2\t4\t0\t\t1\t9\t0\tclassified,linear-congruence,rational\n"
    "bordiga-surface\t4\t2\t6\t3\t\t1\t-1\t0\tclassified,determinantal,rational\n"
    "twisted-cubic\t3\t1\t3\t0\t\t\t\t\tclassified,determinantal,rational\n"
    "complete-intersection-2-3\t5\t3\t6\t4\t2\t1\t\t\tnon-example,complete-intersection\n"
    "complete-intersection-2-2\t4\t2\t4\t1\t\t1\t4\t0\tnon-example,complete-intersection\n";

const std::vector<std::string_view> kColumns = {"name", "n",     "dim", "d",      "pi",
                                                "chi_S", "chi_X", "K2", "scroll", "tags"};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = line.find(sep, start);
    out.push_back(line.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

struct Cursor {
  const std::string& source;
  int line;

  [[noreturn]] void fail(ErrorKind kind, std::size_t column, const std::string& message) const {
    throw Error(kind, source + ":" + std::to_string(line) + ":" + std::to_string(column + 1) + ": " + message);
  }

  std::optional<std::int64_t> integer(const std::vector<std::string>& cells, std::size_t column) const {
    const std::string& cell = cells[column];
    if (cell.empty()) return std::nullopt;
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || end != cell.data() + cell.size())
      fail(ErrorKind::Parse, column, std::string(kColumns[column]) + " '" + cell + "' is not an integer");
    return v;
  }

  std::int64_t required(const std::vector<std::string>& cells, std::size_t column) const {
    const auto v = integer(cells, column);
    if (!v) fail(ErrorKind::MissingField, column, std::string(kColumns[column]) + " is required");
    return *v;
  }
};

VarietyRecord parse_row(const std::string& raw, const Cursor& at) {
  const auto cells = split(raw, '\t');
  if (cells.size() != kColumns.size()) {
    at.fail(ErrorKind::Parse, 0,
            "expected " + std::to_string(kColumns.size()) + " columns, found " + std::to_string(cells.size()));
  }
  VarietyRecord r;
  r.name = cells[0];
  if (r.name.empty()) at.fail(ErrorKind::MissingField, 0, "name is required");
  r.n = static_cast<int>(at.required(cells, 1));
  r.dim = static_cast<int>(at.required(cells, 2));
  r.d = at.required(cells, 3);
  r.pi = at.required(cells, 4);
  r.chi_S = at.integer(cells, 5);
  r.chi_X = at.integer(cells, 6);
  r.k_squared = at.integer(cells, 7);
  if (!cells[8].empty()) {
    if (cells[8] != "0" && cells[8] != "1") at.fail(ErrorKind::Parse, 8, "scroll must be 0 or 1");
    r.scroll = cells[8] == "1";
  }
  if (!cells[9].empty()) r.tags = split(cells[9], ',');

  if (r.dim != r.n - 2) {
    at.fail(ErrorKind::Schema, 2, "dim " + std::to_string(r.dim) + " differs from n - 2 = " + std::to_string(r.n - 2));
  }
  if (r.d < 1) at.fail(ErrorKind::Schema, 3, "degree must be positive");
  if (r.dim == 3) {
    if (!r.chi_S) at.fail(ErrorKind::MissingField, 5, "threefolds need chi_S");
    if (!r.chi_X) at.fail(ErrorKind::MissingField, 6, "threefolds need chi_X");
  } else if (r.dim == 2) {
    if (!r.chi_X) at.fail(ErrorKind::MissingField, 6, "surfaces need chi (chi_X column)");
    if (!r.k_squared) at.fail(ErrorKind::MissingField, 7, "surfaces need K2");
    if (!r.scroll) at.fail(ErrorKind::MissingField, 8, "surfaces need the scroll flag");
  } else if (r.dim != 1) {
    at.fail(ErrorKind::Schema, 2, "only curves, surfaces and threefolds are supported");
  }
  return r;
}

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

bool VarietyRecord::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::vector<VarietyRecord> parse_catalog(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false;
  std::vector<VarietyRecord> records;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    const Cursor at{source, line};
    if (!header) {
      if (raw != kCatalogHeader) at.fail(ErrorKind::Schema, 0, "header must be the tab-separated column list");
      header = true;
      continue;
    }
    records.push_back(parse_row(raw, at));
  }
  if (!header) throw Error(ErrorKind::EmptyInput, source + ": missing header line");
  return records;
}

std::vector<VarietyRecord> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str(), path);
}

std::string format_catalog(const std::vector<VarietyRecord>& records) {
  std::ostringstream out;
  out << kCatalogHeader << "\n";
  for (const auto& r : records) {
    std::string tags;
    for (std::size_t i = 0; i < r.tags.size(); ++i) tags += (i ? "," : "") + r.tags[i];
    out << r.name << '\t' << r.n << '\t' << r.dim << '\t' << r.d << '\t' << r.pi << '\t' << cell(r.chi_S) << '\t'
        << cell(r.chi_X) << '\t' << cell(r.k_squared) << '\t' << (r.scroll ? (*r.scroll ? "1" : "0") : "") << '\t'
        << tags << "\n";
  }
  return out.str();
}

void save_catalog(const std::vector<VarietyRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << format_catalog(records);
}

const std::vector<VarietyRecord>& builtin_catalog() {
  static const std::vector<VarietyRecord> records = parse_catalog(kBuiltin, "builtin");
  return records;
}

std::string_view builtin_catalog_tsv() { return kBuiltin; }

}  // namespace secant::catalog
