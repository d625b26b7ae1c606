#include "secant/congruence_io.hpp"

#include <fstream>
#include <sstream>

namespace secant::congruence {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Rational entry(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const Error& e) {
    fail(line.number, e.what());
  }
}

int header_value(const Line& line, const std::string& key) {
  if (line.tokens.size() != 2 || line.tokens[0] != key) fail(line.number, "expected '" + key + " <value>'");
  try {
    std::size_t used = 0;
    const int v = std::stoi(line.tokens[1], &used);
    if (used != line.tokens[1].size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    fail(line.number, "'" + line.tokens[1] + "' is not an integer");
  }
}

void write_row(std::ostringstream& out, std::span<const Rational> row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << to_string(row[i]);
}

}  // namespace

std::string serialize(const Congruence& c) {
  std::ostringstream out;
  const int n = ambient_dimension(c);
  out << "n " << n << "\nkind " << kind_name(c) << "\n";
  if (const auto* lin = std::get_if<LinearCongruence>(&c)) {
    for (std::size_t i = 0; i < lin->matrices().size(); ++i) {
      out << "matrix " << i + 1 << "\n";
      const auto& m = lin->matrices()[i];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        write_row(out, m.row(r));
        out << "\n";
      }
    }
  } else {
    const auto& det = std::get<DeterminantalCongruence>(c);
    const std::span<const Rational> all(det.coefficients());
    const auto group = static_cast<std::size_t>(n + 1);
    for (int i = 0; i < det.rows(); ++i) {
      for (int j = 0; j < det.cols(); ++j) {
        if (j) out << " | ";
        write_row(out, all.subspan(static_cast<std::size_t>(i * det.cols() + j) * group, group));
      }
      out << "\n";
    }
  }
  return out.str();
}

Congruence parse_congruence(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() < 2) throw Error(ErrorKind::Parse, "missing 'n' and 'kind' header lines");
  const int n = header_value(lines[0], "n");
  if (n < 3) fail(lines[0].number, "n must be at least 3");
  const Line& kind = lines[1];
  if (kind.tokens.size() != 2 || kind.tokens[0] != "kind") fail(kind.number, "expected 'kind linear|determinantal'");
  const auto size = static_cast<std::size_t>(n + 1);
  std::size_t at = 2;

  if (kind.tokens[1] == "linear") {
    std::vector<RationalMatrix> matrices;
    for (int i = 1; i <= n - 1; ++i) {
      if (at >= lines.size()) throw Error(ErrorKind::Parse, "missing 'matrix " + std::to_string(i) + "' block");
      if (header_value(lines[at], "matrix") != i) fail(lines[at].number, "expected 'matrix " + std::to_string(i) + "'");
      ++at;
      std::vector<Rational> entries;
      for (std::size_t r = 0; r < size; ++r, ++at) {
        if (at >= lines.size()) throw Error(ErrorKind::Parse, "matrix " + std::to_string(i) + " is truncated");
        const Line& row = lines[at];
        if (row.tokens.size() != size) fail(row.number, "expected " + std::to_string(size) + " entries");
        for (const auto& t : row.tokens) entries.push_back(entry(row, t));
      }
      matrices.emplace_back(size, size, std::move(entries));
    }
    if (at != lines.size()) fail(lines[at].number, "unexpected trailing content");
    return LinearCongruence::from_matrices(n, std::move(matrices));
  }

  if (kind.tokens[1] == "determinantal") {
    std::vector<Rational> coefficients;
    for (int i = 0; i < n; ++i, ++at) {
      if (at >= lines.size()) throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " matrix rows");
      const Line& row = lines[at];
      std::size_t in_group = 0, groups = 0;
      for (const auto& t : row.tokens) {
        if (t == "|") {
          if (in_group != size) fail(row.number, "each group needs " + std::to_string(size) + " coefficients");
          in_group = 0;
          ++groups;
          continue;
        }
        coefficients.push_back(entry(row, t));
        ++in_group;
      }
      if (in_group != size) fail(row.number, "each group needs " + std::to_string(size) + " coefficients");
      if (groups + 1 != static_cast<std::size_t>(n - 1))
        fail(row.number, "expected " + std::to_string(n - 1) + " groups separated by '|'");
    }
    if (at != lines.size()) fail(lines[at].number, "unexpected trailing content");
    return DeterminantalCongruence::from_coefficients(n, std::move(coefficients));
  }

  fail(kind.number, "unknown kind '" + kind.tokens[1] + "'");
}

Congruence load_congruence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_congruence(buffer.str());
}

void save_congruence(const Congruence& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << serialize(c);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace secant::congruence
