#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "secant/catalog.hpp"
#include "secant/cli.hpp"
#include "secant/congruence.hpp"
#include "secant/congruence_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = secant::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return name;
}

const std::string& cubic_file() {
  static const std::string path =
      write_file("twisted_cubic.cong", secant::congruence::serialize(secant::congruence::DeterminantalCongruence::twisted_cubic()));
  return path;
}

}  // namespace

TEST_CASE("formulas subcommand") {
  const auto q = run({"formulas", "q", "--d", "7", "--pi", "4", "--chiS", "1", "--chiX", "1"});
  CHECK(q.code == 0);
  CHECK(q.out == "1\n");
  CHECK(run({"formulas", "a1", "--d", "9", "--pi", "8", "--chiS", "2"}).out == "7\n");
  CHECK(run({"formulas", "a2", "--d", "10", "--pi", "11"}).out == "20\n");
  CHECK(run({"formulas", "h", "--d", "10", "--pi", "11", "--chi", "5"}).out == "4\n");
  CHECK(run({"formulas", "residual", "--d", "6", "--pi", "4", "--chi", "2"}).out == "1\n");
  CHECK(run({"formulas", "triple", "--d", "6", "--pi", "3", "--chi", "1", "--K2", "-1"}).out == "1\n");
  CHECK(run({"formulas", "double", "--d", "7", "--pi", "4", "--chiS", "1", "--chiX", "1"}).out ==
        "K3 = -2\nHK2 = 7\n");
  CHECK(run({"formulas", "double", "--d", "6", "--pi", "3", "--chi", "1"}).out == "-1\n");
  CHECK(run({"formulas", "a1", "--d", "5", "--pi", "1", "--chi", "0"}).out == "0\n");
  CHECK(run({"formulas", "focal-degree", "--kind", "linear", "--n", "5"}).out == "degree 7\n");
  CHECK(run({"formulas", "focal-degree", "--kind", "determinantal", "--n", "4"}).out == "degree 6, genus 3\n");

  const auto missing = run({"formulas", "q", "--d", "7"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--pi") != std::string::npos);
  CHECK(run({"formulas", "nonsense", "--d", "7"}).code == 2);
  CHECK(run({"formulas", "q", "--d", "7", "--unknown", "3"}).code == 2);
}

TEST_CASE("schubert subcommands") {
  CHECK(run({"schubert", "lincong", "--n", "5"}).out == "(1,3,2), degree 14\n");
  CHECK(run({"schubert", "lincong", "--n", "4"}).out == "(1,2), degree 5\n");
  CHECK(run({"schubert", "pow", "--n", "5", "--l", "3"}).out == "σ[3,0] + 2σ[2,1]\n");
  CHECK(run({"schubert", "pow", "--n", "3", "--l", "4", "--iterative"}).out == "2σ[2,2]\n");
  CHECK(run({"schubert", "pow", "--n", "3", "--l", "4"}).code == 2);
  CHECK(run({"schubert", "pow", "--n", "3", "--l", "2", "--closed", "--iterative"}).code == 2);
  const auto degree = run({"schubert", "degree", "--n", "5", "--multidegree", "1,3,2"});
  CHECK(degree.code == 0);
  CHECK(degree.out == "(1,3,2), degree 14\nnote: weights C(n,i)(n-2i+1)/(n-i+1) give 23\n");
  CHECK(run({"schubert", "degree", "--n", "5", "--multidegree", "1,3"}).code == 2);
  CHECK(run({"schubert"}).code == 2);
}

TEST_CASE("construct and verify") {
  const auto made = run({"construct", "--kind", "linear", "--n", "5", "--seed", "42", "--out", "lin5.cong"});
  CHECK(made.code == 0);
  const auto order = run({"verify", "order", "--in", "lin5.cong", "--trials", "10", "--seed", "3"});
  CHECK(order.code == 0);
  CHECK(order.out.find("unique lines 10/10") != std::string::npos);
  const auto foci = run({"verify", "foci", "--in", "lin5.cong", "--trials", "5", "--seed", "3"});
  CHECK(foci.code == 0);
  CHECK(foci.out.find("expected gcd degree 4: PASS") != std::string::npos);

  const auto printed = run({"construct", "--kind", "determinantal", "--n", "3", "--seed", "8"});
  CHECK(printed.code == 0);
  CHECK(printed.out.rfind("n 3\nkind determinantal\n", 0) == 0);
  CHECK(run({"construct", "--kind", "linear", "--n", "2", "--seed", "1"}).code == 2);
  CHECK(run({"construct", "--kind", "planar", "--n", "4", "--seed", "1"}).code == 2);
  std::remove("lin5.cong");
}

TEST_CASE("twisted cubic foci") {
  const auto r = run({"verify", "foci", "--in", cubic_file(), "--trials", "10", "--seed", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(
      run({"--format", "json", "verify", "foci", "--in", cubic_file(), "--trials", "10", "--seed", "1"}).out);
  CHECK(j["pass"] == true);
  for (const auto& p : j["probes"]) {
    if (p["focal"] == true) continue;
    CHECK(p["gcd_degree"] == 2);
  }
}

TEST_CASE("pfaffian subcommand") {
  run({"construct", "--kind", "linear", "--n", "5", "--seed", "4", "--out", "pf5.cong"});
  const auto odd = run({"pfaffian", "--in", "pf5.cong"});
  CHECK(odd.code == 0);
  CHECK(odd.out.find("homogeneous of degree 3 in 4 variables") != std::string::npos);
  run({"construct", "--kind", "linear", "--n", "4", "--seed", "4", "--out", "pf4.cong"});
  const auto even = run({"pfaffian", "--in", "pf4.cong"});
  CHECK(even.code == 0);
  CHECK(even.out.find("vanishes identically") != std::string::npos);
  CHECK(run({"pfaffian", "--in", cubic_file()}).code == 2);
  CHECK(run({"pfaffian", "--in", "no-such-file.cong"}).code == 2);
  std::remove("pf5.cong");
  std::remove("pf4.cong");
}

TEST_CASE("classify and scan") {
  const auto all = run({"classify", "--catalog", "builtin"});
  CHECK(all.code == 1);
  CHECK(all.out.find("palatini-scroll: PASS") != std::string::npos);
  CHECK(all.out.find("complete-intersection-2-3: FAIL") != std::string::npos);

  std::vector<secant::catalog::VarietyRecord> good;
  for (const auto& r : secant::catalog::builtin_catalog())
    if (r.has_tag("classified")) good.push_back(r);
  secant::catalog::save_catalog(good, "good.tsv");
  CHECK(run({"classify", "--catalog", "good.tsv"}).code == 0);
  CHECK(run({"classify", "--catalog", "good.tsv", "--dim", "2"}).out.find("bordiga-surface: PASS") != std::string::npos);
  CHECK(run({"classify", "--catalog", "good.tsv", "--multiplicity", "0"}).code == 2);
  CHECK(run({"classify", "--catalog", std::string(SECANT_SOURCE_DIR) + "/data/catalog.tsv"}).out == all.out);
  std::remove("good.tsv");
  write_file("bad.tsv", "name\tn\n");
  CHECK(run({"classify", "--catalog", "bad.tsv"}).code == 2);
  std::remove("bad.tsv");

  CHECK(run({"scan", "--d", "9", "--pi-max", "20", "--chi-max", "10"}).out == "pi=8 chi_S=2 chi_X=2\n");
  CHECK(run({"scan", "--d", "13", "--pi-max", "10", "--chi-max", "3"}).out == "no survivors\n");
  CHECK(run({"scan", "--d", "9", "--pi-max", "-1", "--chi-max", "10"}).code == 2);
}

TEST_CASE("json output parses for every subcommand") {
  run({"construct", "--kind", "linear", "--n", "3", "--seed", "2", "--out", "json3.cong"});
  const std::vector<std::vector<std::string>> invocations{
      {"schubert", "pow", "--n", "5", "--l", "3"},
      {"schubert", "lincong", "--n", "5"},
      {"schubert", "degree", "--n", "5", "--multidegree", "1,3,2"},
      {"formulas", "q", "--d", "7", "--pi", "4", "--chiS", "1", "--chiX", "1"},
      {"formulas", "focal-degree", "--kind", "linear", "--n", "5"},
      {"construct", "--kind", "determinantal", "--n", "4", "--seed", "1"},
      {"verify", "order", "--in", "json3.cong", "--trials", "3"},
      {"verify", "foci", "--in", "json3.cong", "--trials", "3"},
      {"pfaffian", "--in", "json3.cong"},
      {"classify", "--catalog", "builtin"},
      {"scan", "--d", "7", "--pi-max", "10", "--chi-max", "5"},
  };
  for (auto args : invocations) {
    args.insert(args.begin(), {"--format", "json"});
    const auto r = run(args);
    CAPTURE(args[2]);
    CHECK(r.err.empty());
    CHECK(nlohmann::json::accept(r.out));
  }
  const auto q = nlohmann::json::parse(
      run({"formulas", "q", "--d", "7", "--pi", "4", "--chiS", "1", "--chiX", "1", "--format", "json"}).out);
  CHECK(q["values"]["q"]["num"] == "1");
  CHECK(q["values"]["q"]["den"] == "1");
  const auto lc = nlohmann::json::parse(run({"--format", "json", "schubert", "lincong", "--n", "5"}).out);
  CHECK(lc["multidegree"] == nlohmann::json::array({1, 3, 2}));
  CHECK(lc["plucker_degree"] == 14);
  std::remove("json3.cong");
}

TEST_CASE("tsv output") {
  CHECK(run({"--format", "tsv", "scan", "--d", "10", "--pi-max", "20", "--chi-max", "10"}).out ==
        "pi\tchi_S\tchi_X\n8\t-4\t8\n11\t5\t1\n");
  CHECK(run({"--format", "tsv", "schubert", "pow", "--n", "5", "--l", "4"}).out == "a\tb\tcoefficient\n4\t0\t1\n3\t1\t3\n2\t2\t2\n");
  CHECK(run({"--format", "xml", "scan", "--d", "10", "--pi-max", "1", "--chi-max", "1"}).code == 2);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"construct", "--kind", "determinantal", "--n", "5", "--seed", "17"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> verify{"verify", "foci", "--in", cubic_file(), "--trials", "6", "--seed", "5"};
  CHECK(run(verify).out == run(verify).out);
}

TEST_CASE("help and usage") {
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
