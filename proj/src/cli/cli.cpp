#include "secant/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "secant/catalog.hpp"
#include "secant/congruence.hpp"
#include "secant/congruence_io.hpp"
#include "secant/formulas.hpp"
#include "secant/schubert.hpp"

namespace secant::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace cg = secant::congruence;
namespace f = secant::formulas;

enum class Format { Text, Json, Tsv };

Json rational_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

Json point_json(const cg::ProjPoint& p) { return integers_json(p.coords()); }

Json line_json(const cg::ProjLine& l) { return {{"p0", point_json(l.p0())}, {"p1", point_json(l.p1())}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Options {
  Format format = Format::Text;

  int n = 0;
  int l = 0;
  bool iterative = false;
  std::string multidegree;

  std::string formula;
  std::optional<std::int64_t> d, pi, chi_S, chi_X, chi, k_squared;

  std::string kind;
  std::uint64_t seed = 1;
  std::uint64_t bound = kDefaultBound;
  std::string in_path, out_path;
  std::size_t trials = 10;

  std::string catalog;
  std::optional<int> dim;
  std::int64_t multiplicity = 1;

  std::int64_t pi_max = 0, chi_max = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int schubert_pow() {
    const auto c = o_.iterative ? schubert::sigma1_power_iterative(o_.n, o_.l) : schubert::sigma1_power_closed(o_.n, o_.l);
    const std::string method = o_.iterative ? "iterative" : "closed";
    switch (o_.format) {
      case Format::Text: out_ << c.to_string() << "\n"; break;
      case Format::Json: {
        Json terms = Json::array();
        for (const auto& [idx, coeff] : c.terms()) terms.push_back({{"a", idx.a}, {"b", idx.b}, {"coefficient", integer_json(coeff)}});
        out_ << Json{{"n", o_.n}, {"l", o_.l}, {"method", method}, {"terms", terms}}.dump(2) << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "a\tb\tcoefficient\n";
        for (const auto& [idx, coeff] : c.terms()) out_ << idx.a << '\t' << idx.b << '\t' << coeff.get_str() << "\n";
        break;
    }
    return kExitOk;
  }

  int schubert_lincong() { return multidegree_report(schubert::linear_congruence_multidegree(o_.n), false); }

  int schubert_degree() {
    std::vector<Integer> degrees;
    std::stringstream in(o_.multidegree);
    for (std::string part; std::getline(in, part, ',');) {
      const Rational q = parse_rational(part);
      degrees.push_back(to_integer(q));
    }
    return multidegree_report(schubert::Multidegree(o_.n, std::move(degrees)), true);
  }

  int formulas() {
    if (o_.formula == "focal-degree") return focal_degree();
    std::vector<std::pair<std::string, Rational>> values;
    Json inputs = Json::object();
    const auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
      if (!v) throw Error(ErrorKind::MissingField, std::string("formulas ") + o_.formula + " needs " + flag);
      inputs[std::string(flag).substr(2)] = *v;
      return *v;
    };
    // Surface formulas read --chi, falling back to --chiS.
    const auto surface_chi = [&] { return o_.chi ? need(o_.chi, "--chi") : need(o_.chi_S, "--chiS"); };

    if (o_.formula == "q") {
      const f::ThreefoldInvariants t{need(o_.d, "--d"), need(o_.pi, "--pi"), need(o_.chi_S, "--chiS"),
                                     need(o_.chi_X, "--chiX")};
      values.emplace_back("q", f::quadruple_points(t));
    } else if (o_.formula == "h") {
      values.emplace_back("h", f::four_secants_through_point({need(o_.d, "--d"), need(o_.pi, "--pi"), surface_chi()}));
    } else if (o_.formula == "a1") {
      values.emplace_back("a1", f::foursecant_scroll_degree_a1({need(o_.d, "--d"), need(o_.pi, "--pi"), surface_chi()}));
    } else if (o_.formula == "a2") {
      values.emplace_back("a2", f::curve_foursecants_a2(need(o_.d, "--d"), need(o_.pi, "--pi")));
    } else if (o_.formula == "residual") {
      values.emplace_back("residual", f::residual_4k({need(o_.d, "--d"), need(o_.pi, "--pi"), surface_chi()}));
    } else if (o_.formula == "triple") {
      const f::SurfaceInvariants s{need(o_.d, "--d"), need(o_.pi, "--pi"), surface_chi(), need(o_.k_squared, "--K2")};
      values.emplace_back("triple", f::apparent_triple_points(s));
    } else if (o_.formula == "double") {
      if (o_.chi_X) {
        const f::ThreefoldInvariants t{need(o_.d, "--d"), need(o_.pi, "--pi"), need(o_.chi_S, "--chiS"),
                                       need(o_.chi_X, "--chiX")};
        values.emplace_back("K3", f::k_cubed(t));
        values.emplace_back("HK2", f::h_k_squared(t));
      } else {
        values.emplace_back("K2", f::surface_k_squared({need(o_.d, "--d"), need(o_.pi, "--pi"), surface_chi()}));
      }
    }

    switch (o_.format) {
      case Format::Text:
        if (values.size() == 1) {
          out_ << to_string(values[0].second) << "\n";
        } else {
          for (const auto& [name, v] : values) out_ << name << " = " << to_string(v) << "\n";
        }
        break;
      case Format::Json: {
        Json vals = Json::object();
        for (const auto& [name, v] : values) vals[name] = rational_json(v);
        out_ << Json{{"formula", o_.formula}, {"inputs", inputs}, {"values", vals}}.dump(2) << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "name\tvalue\n";
        for (const auto& [name, v] : values) out_ << name << '\t' << to_string(v) << "\n";
        break;
    }
    return kExitOk;
  }

  int construct() {
    const cg::Congruence c = o_.kind == "linear"
                                 ? cg::Congruence(cg::random_linear_congruence(o_.n, o_.seed, o_.bound))
                                 : cg::Congruence(cg::random_determinantal_congruence(o_.n, o_.seed, o_.bound));
    const cg::ProjPoint witness = std::visit([](const auto& x) { return x.witness(); }, c);
    if (!o_.out_path.empty()) cg::save_congruence(c, o_.out_path);
    switch (o_.format) {
      case Format::Text:
        if (o_.out_path.empty()) {
          out_ << cg::serialize(c);
        } else {
          out_ << "wrote " << cg::kind_name(c) << " congruence on P^" << o_.n << " to " << o_.out_path
               << " (witness " << witness.to_string() << ")\n";
        }
        break;
      case Format::Json:
        out_ << Json{{"kind", cg::kind_name(c)}, {"n", o_.n},       {"seed", o_.seed},
                     {"bound", o_.bound},        {"witness", point_json(witness)}, {"file", cg::serialize(c)}}
                    .dump(2)
             << "\n";
        break;
      case Format::Tsv:
        out_ << "kind\tn\tseed\tbound\twitness\n"
             << cg::kind_name(c) << '\t' << o_.n << '\t' << o_.seed << '\t' << o_.bound << '\t' << witness.to_string()
             << "\n";
        break;
    }
    return kExitOk;
  }

  int verify_order() {
    const cg::Congruence c = cg::load_congruence(o_.in_path);
    const cg::OrderReport report = cg::order_check(c, o_.trials, o_.seed);
    switch (o_.format) {
      case Format::Text:
        for (std::size_t i = 0; i < report.probes.size(); ++i) {
          const auto& p = report.probes[i];
          out_ << "probe " << i << " " << p.point.to_string() << ": ";
          if (p.focal) out_ << "focal point, skipped\n";
          else if (p.success) out_ << "line " << p.line->to_string() << "\n";
          else out_ << "FAILED " << p.diagnostic << "\n";
        }
        out_ << "unique lines " << report.successes << "/" << report.trials << ", focal probes "
             << report.focal_probes << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
        break;
      case Format::Json: {
        Json probes = Json::array();
        for (const auto& p : report.probes) {
          Json j{{"point", point_json(p.point)}, {"focal", p.focal}, {"success", p.success}};
          j["line"] = p.line ? line_json(*p.line) : Json(nullptr);
          j["diagnostic"] = p.diagnostic;
          probes.push_back(std::move(j));
        }
        out_ << Json{{"kind", cg::kind_name(c)}, {"n", cg::ambient_dimension(c)}, {"trials", report.trials},
                     {"successes", report.successes}, {"focal_probes", report.focal_probes},
                     {"pass", report.pass()}, {"probes", probes}}
                    .dump(2)
             << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "probe\tpoint\tstatus\tline\n";
        for (std::size_t i = 0; i < report.probes.size(); ++i) {
          const auto& p = report.probes[i];
          out_ << i << '\t' << p.point.to_string() << '\t' << (p.focal ? "focal" : p.success ? "ok" : "failed") << '\t'
               << (p.line ? p.line->to_string() : p.diagnostic) << "\n";
        }
        break;
    }
    return report.pass() ? kExitOk : kExitFailure;
  }

  int verify_foci() {
    const cg::Congruence c = cg::load_congruence(o_.in_path);
    const int n = cg::ambient_dimension(c);
    const cg::OrderReport order = cg::order_check(c, o_.trials, o_.seed);
    struct Row {
      std::size_t probe;
      const cg::ProbeResult* result;
      std::optional<cg::FocalSliceReport> slice;
      std::vector<cg::ProjPoint> foci;
      bool pass;
    };
    std::vector<Row> rows;
    bool all = order.pass();
    for (std::size_t i = 0; i < order.probes.size(); ++i) {
      const auto& p = order.probes[i];
      Row row{i, &p, std::nullopt, {}, p.focal};
      if (p.line) {
        row.slice = cg::focal_points_on_line(c, *p.line);
        row.foci = cg::rational_focal_points(*row.slice, *p.line);
        row.pass = row.slice->gcd_degree == n - 1;
        for (const auto& x : row.foci) row.pass = row.pass && cg::is_focal_point(c, x);
      }
      all = all && row.pass;
      rows.push_back(std::move(row));
    }
    switch (o_.format) {
      case Format::Text:
        for (const auto& r : rows) {
          out_ << "probe " << r.probe << " " << r.result->point.to_string() << ": ";
          if (!r.slice) {
            out_ << (r.result->focal ? "focal point, skipped" : "FAILED " + r.result->diagnostic) << "\n";
            continue;
          }
          out_ << "line " << r.result->line->to_string() << ", gcd degree " << r.slice->gcd_degree << " ("
               << r.slice->gcd.to_string() << ")";
          if (!r.foci.empty()) {
            std::vector<std::string> pts;
            for (const auto& x : r.foci) pts.push_back(x.to_string());
            out_ << ", rational foci " << join(pts, " ");
          }
          out_ << (r.pass ? "" : "  FAIL") << "\n";
        }
        out_ << "expected gcd degree " << n - 1 << ": " << (all ? "PASS" : "FAIL") << "\n";
        break;
      case Format::Json: {
        Json probes = Json::array();
        for (const auto& r : rows) {
          Json j{{"point", point_json(r.result->point)}, {"focal", r.result->focal}};
          j["line"] = r.result->line ? line_json(*r.result->line) : Json(nullptr);
          if (r.slice) {
            j["minor_degrees"] = r.slice->minor_degrees;
            j["gcd"] = r.slice->gcd.to_string();
            j["gcd_degree"] = r.slice->gcd_degree;
            j["focal_line"] = r.slice->focal_line;
            Json foci = Json::array();
            for (const auto& x : r.foci) foci.push_back(point_json(x));
            j["rational_foci"] = foci;
          }
          j["pass"] = r.pass;
          probes.push_back(std::move(j));
        }
        out_ << Json{{"kind", cg::kind_name(c)}, {"n", n}, {"expected_gcd_degree", n - 1}, {"pass", all},
                     {"probes", probes}}
                    .dump(2)
             << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "probe\tpoint\tgcd_degree\tgcd\tpass\n";
        for (const auto& r : rows) {
          out_ << r.probe << '\t' << r.result->point.to_string() << '\t'
               << (r.slice ? std::to_string(r.slice->gcd_degree) : "") << '\t'
               << (r.slice ? r.slice->gcd.to_string() : "") << '\t' << (r.pass ? 1 : 0) << "\n";
        }
        break;
    }
    return all ? kExitOk : kExitFailure;
  }

  int pfaffian() {
    const cg::Congruence c = cg::load_congruence(o_.in_path);
    const auto* lin = std::get_if<cg::LinearCongruence>(&c);
    if (!lin) throw Error(ErrorKind::InvalidArgument, "pfaffian needs a linear congruence");
    const int n = lin->n();
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) names.push_back("l" + std::to_string(i));
    const bool odd = n % 2 == 1;
    const MultiPoly poly = odd ? cg::pfaffian_polynomial(*lin) : cg::skew_combination_determinant(*lin);
    const bool pass = odd || poly.is_zero();
    switch (o_.format) {
      case Format::Text:
        if (odd) {
          out_ << "Pf = " << poly.to_string(names) << "\n"
               << "homogeneous of degree " << poly.total_degree() << " in " << n - 1 << " variables\n";
        } else {
          out_ << "n = " << n << " is even: det(sum l_i A_i) " << (pass ? "vanishes identically" : "= " + poly.to_string(names))
               << "\n";
        }
        break;
      case Format::Json: {
        Json j{{"n", n}, {"parity", odd ? "odd" : "even"}};
        if (odd) {
          j["pfaffian"] = poly.to_string(names);
          j["degree"] = poly.total_degree();
        } else {
          j["determinant_zero"] = poly.is_zero();
        }
        j["pass"] = pass;
        out_ << j.dump(2) << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "n\tparity\tdegree\tpolynomial\n"
             << n << '\t' << (odd ? "odd" : "even") << '\t' << poly.total_degree() << '\t' << poly.to_string(names)
             << "\n";
        break;
    }
    return pass ? kExitOk : kExitFailure;
  }

  int classify() {
    std::vector<catalog::VarietyRecord> records =
        o_.catalog == "builtin" ? catalog::builtin_catalog() : catalog::load_catalog(o_.catalog);
    if (o_.dim) std::erase_if(records, [&](const auto& r) { return r.dim != *o_.dim; });
    const catalog::ClassificationReport report = catalog::classify(records, o_.multiplicity);
    bool all = true;
    for (const auto& e : report) all = all && e.pass;
    switch (o_.format) {
      case Format::Text:
        for (const auto& e : report) {
          std::vector<std::string> values;
          for (const auto& [k, v] : e.computed) values.push_back(k + "=" + to_string(v));
          out_ << e.name << ": " << (e.pass ? "PASS" : "FAIL") << "  " << join(values, " ");
          if (!e.pass) out_ << "  [" << join(e.reasons(), "; ") << "]";
          out_ << "\n";
        }
        break;
      case Format::Json: out_ << catalog::report_json(report) << "\n"; break;
      case Format::Tsv:
        out_ << "name\tdim\tpass\tcomputed\treasons\n";
        for (const auto& e : report) {
          std::vector<std::string> values;
          for (const auto& [k, v] : e.computed) values.push_back(k + "=" + to_string(v));
          out_ << e.name << '\t' << e.dim << '\t' << (e.pass ? 1 : 0) << '\t' << join(values, ",") << '\t'
               << join(e.reasons(), "; ") << "\n";
        }
        break;
    }
    return all ? kExitOk : kExitFailure;
  }

  int scan() {
    const auto survivors = catalog::scan_exclusion(*o_.d, 0, o_.pi_max, -o_.chi_max, o_.chi_max);
    switch (o_.format) {
      case Format::Text:
        if (survivors.empty()) out_ << "no survivors\n";
        for (const auto& s : survivors) out_ << "pi=" << s.pi << " chi_S=" << s.chi_S << " chi_X=" << s.chi_X << "\n";
        break;
      case Format::Json: {
        Json list = Json::array();
        for (const auto& s : survivors) list.push_back({{"pi", s.pi}, {"chi_S", s.chi_S}, {"chi_X", s.chi_X}});
        out_ << Json{{"d", *o_.d}, {"pi_max", o_.pi_max}, {"chi_max", o_.chi_max}, {"survivors", list}}.dump(2)
             << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "pi\tchi_S\tchi_X\n";
        for (const auto& s : survivors) out_ << s.pi << '\t' << s.chi_S << '\t' << s.chi_X << "\n";
        break;
    }
    return kExitOk;
  }

 private:
  int multidegree_report(const schubert::Multidegree& m, bool with_variant) {
    const Integer degree = schubert::plucker_degree(m);
    const Rational variant = schubert::plucker_degree_binomial_variant(m);
    switch (o_.format) {
      case Format::Text:
        out_ << m.to_string() << ", degree " << degree.get_str() << "\n";
        if (with_variant && variant != Rational(degree)) {
          out_ << "note: weights C(n,i)(n-2i+1)/(n-i+1) give " << to_string(variant) << "\n";
        }
        break;
      case Format::Json: {
        Json j{{"n", m.n()}, {"multidegree", integers_json(m.degrees())}, {"plucker_degree", integer_json(degree)}};
        if (with_variant) j["binomial_variant"] = rational_json(variant);
        out_ << j.dump(2) << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "n\tmultidegree\tplucker_degree\n" << m.n() << '\t' << m.to_string() << '\t' << degree.get_str() << "\n";
        break;
    }
    return kExitOk;
  }

  int focal_degree() {
    if (o_.kind.empty()) throw Error(ErrorKind::MissingField, "formulas focal-degree needs --kind");
    if (o_.n == 0) throw Error(ErrorKind::MissingField, "formulas focal-degree needs --n");
    std::vector<std::pair<std::string, Integer>> values;
    if (o_.kind == "linear") {
      values.emplace_back("degree", f::linear_focal_degree(o_.n));
    } else {
      const auto inv = f::determinantal_invariants(o_.n);
      values.emplace_back("degree", inv.degree);
      values.emplace_back("genus", inv.genus);
    }
    switch (o_.format) {
      case Format::Text: {
        std::vector<std::string> parts;
        for (const auto& [k, v] : values) parts.push_back(k + " " + v.get_str());
        out_ << join(parts, ", ") << "\n";
        break;
      }
      case Format::Json: {
        Json j{{"kind", o_.kind}, {"n", o_.n}};
        for (const auto& [k, v] : values) j[k] = integer_json(v);
        out_ << j.dump(2) << "\n";
        break;
      }
      case Format::Tsv:
        out_ << "name\tvalue\n";
        for (const auto& [k, v] : values) out_ << k << '\t' << v.get_str() << "\n";
        break;
    }
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
};

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGeneric:
    case ErrorKind::GenericityExhausted:
    case ErrorKind::KernelTooBig:
    case ErrorKind::RankDeficient:
    case ErrorKind::SolutionSpace:
      return false;
    default:
      return true;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int(Runner&)> action;

  CLI::App app{"Exact tools for first-order congruences of lines and their focal loci", "secant"};
  app.fallthrough();
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"tsv", Format::Tsv}};
  app.add_option_function<std::string>(
         "--format", [&](const std::string& name) { o.format = formats.at(name); }, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}).description(""))
      ->option_text("text|json|tsv");

  const auto add_n = [&](CLI::App* sub, int min) {
    return sub->add_option("--n", o.n, "Ambient dimension")->required()->check(CLI::Range(min, 64));
  };

  auto* schubert = app.add_subcommand("schubert", "Schubert calculus on G(1,n)");
  schubert->require_subcommand(1);
  auto* pow = schubert->add_subcommand("pow", "Expand sigma_1^l");
  add_n(pow, 2);
  pow->add_option("--l", o.l, "Exponent")->required();
  auto* closed_flag = pow->add_flag("--closed", "Use the closed form (default)");
  pow->add_flag("--iterative", o.iterative, "Apply Pieri l times")->excludes(closed_flag);
  pow->callback([&] { action = &Runner::schubert_pow; });
  auto* lincong = schubert->add_subcommand("lincong", "Multidegree and degree of a general linear congruence");
  add_n(lincong, 2);
  lincong->callback([&] { action = &Runner::schubert_lincong; });
  auto* degree = schubert->add_subcommand("degree", "Plucker degree of a congruence with given multidegree");
  add_n(degree, 2);
  degree->add_option("--multidegree", o.multidegree, "Comma-separated a0,a1,...")->required();
  degree->callback([&] { action = &Runner::schubert_degree; });

  auto* formulas = app.add_subcommand("formulas", "Closed-form invariants");
  formulas->add_option("formula", o.formula, "q|h|a1|a2|residual|triple|double|focal-degree")
      ->required()
      ->check(CLI::IsMember({"q", "h", "a1", "a2", "residual", "triple", "double", "focal-degree"}));
  formulas->add_option("--d", o.d, "Degree");
  formulas->add_option("--pi", o.pi, "Sectional genus");
  formulas->add_option("--chiS", o.chi_S, "chi(O_S) of the hyperplane section");
  formulas->add_option("--chiX", o.chi_X, "chi(O_X)");
  formulas->add_option("--chi", o.chi, "chi(O_S) of a surface");
  formulas->add_option("--K2", o.k_squared, "K^2 of a surface");
  formulas->add_option("--kind", o.kind, "Congruence kind for focal-degree")
      ->check(CLI::IsMember({"linear", "determinantal"}));
  formulas->add_option("--n", o.n, "Ambient dimension for focal-degree");
  formulas->callback([&] { action = &Runner::formulas; });

  auto* construct = app.add_subcommand("construct", "Draw a random congruence");
  construct->add_option("--kind", o.kind, "linear|determinantal")
      ->required()
      ->check(CLI::IsMember({"linear", "determinantal"}));
  add_n(construct, 3);
  construct->add_option("--seed", o.seed, "Random seed")->required();
  construct->add_option("--bound", o.bound, "Entry bound")->capture_default_str()->check(CLI::PositiveNumber);
  construct->add_option("--out", o.out_path, "Write the congruence file here");
  construct->callback([&] { action = &Runner::construct; });

  auto* verify = app.add_subcommand("verify", "Check a congruence file");
  verify->require_subcommand(1);
  for (const auto& [name, help, method] :
       {std::tuple{"order", "One line through each probe point", &Runner::verify_order},
        std::tuple{"foci", "Focal gcd degree on each probe line", &Runner::verify_foci}}) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--in", o.in_path, "Congruence file")->required();
    sub->add_option("--trials", o.trials, "Probe count")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Probe seed")->capture_default_str();
    sub->callback([&action, m = method] { action = m; });
  }

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of sum l_i A_i for a linear congruence");
  pf->add_option("--in", o.in_path, "Congruence file")->required();
  pf->callback([&] { action = &Runner::pfaffian; });

  auto* classify = app.add_subcommand("classify", "Classify catalog records");
  classify->add_option("--catalog", o.catalog, "TSV file, or 'builtin'")->required();
  classify->add_option("--dim", o.dim, "Only records of this dimension")->check(CLI::IsMember({1, 2, 3}));
  classify->add_option("--multiplicity", o.multiplicity, "Multiplicity k in the degree bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  classify->callback([&] { action = &Runner::classify; });

  auto* scan = app.add_subcommand("scan", "Invariant triples with q = 1 and residual 0");
  scan->add_option("--d", o.d, "Degree")->required();
  scan->add_option("--pi-max", o.pi_max, "Scan 0 <= pi <= P")->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--chi-max", o.chi_max, "Scan -C <= chi <= C")->required()->check(CLI::NonNegativeNumber);
  scan->callback([&] { action = &Runner::scan; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Runner runner(o, out);
    return action(runner);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kExitUsage : kExitFailure;
  }
}

}  // namespace secant::cli
