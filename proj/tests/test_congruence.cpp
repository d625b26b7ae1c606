#include <algorithm>
#include <cstdio>
#include <functional>

#include "doctest.h"
#include "secant/congruence.hpp"
#include "secant/congruence_io.hpp"

using namespace secant;
using namespace secant::congruence;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no secant::Error thrown");
  return ErrorKind::InvalidArgument;
}

BinaryForm st() { return BinaryForm(std::vector<Rational>{0, 1, 0}); }

RationalMatrix elementary_skew(std::size_t size, std::size_t i, std::size_t j) {
  RationalMatrix m(size, size, Rational(0));
  m(i, j) = 1;
  m(j, i) = -1;
  return m;
}

}  // namespace

TEST_CASE("projective points are canonical") {
  const std::vector<Rational> v{Rational(0), Rational(-1, 2), Rational(3, 4)};
  const ProjPoint p{std::span<const Rational>(v)};
  CHECK(p.coords() == std::vector<Integer>{0, 2, -3});
  CHECK(p == ProjPoint({0, -4, 6}));
  CHECK(p.to_string() == "(0:2:-3)");
  CHECK(p.ambient_dimension() == 2);
  CHECK_THROWS_AS(ProjPoint({0, 0, 0}), Error);
  CHECK_THROWS_AS(ProjPoint({5}), Error);
}

TEST_CASE("projective lines") {
  const ProjLine l(ProjPoint{1, 0, 0, 0}, ProjPoint{0, 0, 0, 1});
  CHECK(l.contains(ProjPoint{2, 0, 0, -3}));
  CHECK_FALSE(l.contains(ProjPoint{1, 1, 0, 0}));
  CHECK(l == l.swapped());
  CHECK(l == ProjLine(ProjPoint{1, 0, 0, 1}, ProjPoint{1, 0, 0, -1}));
  CHECK(l.point_at(2, 3) == std::vector<Rational>{2, 0, 0, 3});
  CHECK_THROWS_AS(ProjLine(ProjPoint{1, 2, 0, 0}, ProjPoint{-2, -4, 0, 0}), Error);
  CHECK_THROWS_AS(ProjLine(ProjPoint{1, 2, 0}, ProjPoint{0, 0, 0, 1}), Error);
}

TEST_CASE("twisted cubic congruence") {
  const auto tc = DeterminantalCongruence::twisted_cubic();
  CHECK(tc.n() == 3);
  CHECK(tc.coefficient(0, 0, 0) == 1);
  CHECK(tc.coefficient(2, 1, 3) == 1);
  CHECK(tc.coefficient(1, 0, 0) == 0);

  const ProjPoint p{1, 0, 0, 1};
  const DeterminantalLine dl = line_through_point(tc, p);
  CHECK(dl.row_combination == std::vector<Integer>{0, 1, 0});
  const ProjLine v12(ProjPoint{1, 0, 0, 0}, ProjPoint{0, 0, 0, 1});
  CHECK(dl.line == v12);
  CHECK(dl.line.p0() == ProjPoint{1, 0, 0, 0});
  CHECK(dl.line.p1() == ProjPoint{0, 0, 0, 1});
  for (const auto& form : combined_row_on_line(tc, dl.row_combination, dl.line)) CHECK(form.is_zero());

  const FocalSliceReport r = focal_points_on_line(tc, dl.line);
  REQUIRE(r.minors.size() == 3);
  CHECK(r.minors[0].is_zero());
  CHECK(r.minors[1] == st());
  CHECK(r.minors[2].is_zero());
  CHECK(r.minor_degrees == std::vector<int>{-1, 2, -1});
  CHECK(r.gcd == st());
  CHECK(r.gcd_degree == 2);
  CHECK_FALSE(r.focal_line);

  const auto foci = rational_focal_points(r, dl.line);
  REQUIRE(foci.size() == 2);
  CHECK(std::count(foci.begin(), foci.end(), ProjPoint{0, 0, 0, 1}) == 1);
  CHECK(std::count(foci.begin(), foci.end(), ProjPoint{1, 0, 0, 0}) == 1);
  for (const auto& x : foci) CHECK(is_focal_point(tc, x));

  CHECK(is_focal_point(tc, ProjPoint{1, 0, 0, 0}));
  CHECK_FALSE(is_focal_point(tc, ProjPoint{1, 0, 0, 1}));
  CHECK(kind_of([&] { line_through_point(tc, ProjPoint{1, 0, 0, 0}); }) == ErrorKind::SolutionSpace);
}

TEST_CASE("secants of the twisted cubic through rational points of the curve") {
  const auto tc = DeterminantalCongruence::twisted_cubic();
  for (long a = -2; a <= 2; ++a)
    for (long b = a + 1; b <= 3; ++b) {
      const std::vector<Rational> sum{2, Rational(a + b), Rational(a * a + b * b), Rational(a * a * a + b * b * b)};
      const ProjPoint mid{std::span<const Rational>(sum)};
      const DeterminantalLine dl = line_through_point(tc, mid);
      const FocalSliceReport r = focal_points_on_line(tc, dl.line);
      CHECK(r.gcd_degree == 2);
      const auto foci = rational_focal_points(r, dl.line);
      CHECK(foci.size() == 2);
      for (const auto& x : foci) {
        CHECK(is_focal_point(tc, x));
        CHECK((x == ProjPoint{1, a, a * a, a * a * a} || x == ProjPoint{1, b, b * b, b * b * b}));
      }
    }
}

TEST_CASE("random linear congruences have the forced shapes") {
  for (auto [n, seed] : {std::pair{5, 42}, std::pair{4, 7}, std::pair{3, 1}}) {
    const auto c = random_linear_congruence(n, static_cast<std::uint64_t>(seed));
    CHECK(c.n() == n);
    REQUIRE(c.matrices().size() == static_cast<std::size_t>(n - 1));
    for (const auto& m : c.matrices()) {
      CHECK(m.rows() == static_cast<std::size_t>(n + 1));
      CHECK(is_skew_symmetric(m));
    }
    CHECK_NOTHROW(line_through_point(c, c.witness()));
  }
  CHECK(kind_of([] { random_linear_congruence(2, 1); }) == ErrorKind::OutOfRange);
  CHECK(random_linear_congruence(5, 42).matrices() == random_linear_congruence(5, 42).matrices());
}

TEST_CASE("random determinantal congruences have the forced shapes") {
  for (auto [n, seed] : {std::pair{4, 3}, std::pair{5, 3}}) {
    const auto c = random_determinantal_congruence(n, static_cast<std::uint64_t>(seed));
    CHECK(c.rows() == n);
    CHECK(c.cols() == n - 1);
    CHECK(c.coefficients().size() == static_cast<std::size_t>(n * (n - 1) * (n + 1)));
    const RationalMatrix a = c.evaluate(c.witness().rationals());
    CHECK(rank(a) == static_cast<std::size_t>(n - 1));
  }
  CHECK(kind_of([] { random_determinantal_congruence(2, 1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("explicit input is validated") {
  std::vector<RationalMatrix> zeros(2, RationalMatrix(4, 4, Rational(0)));
  CHECK(kind_of([&] { LinearCongruence::from_matrices(3, zeros); }) == ErrorKind::NotGeneric);
  std::vector<RationalMatrix> bad{elementary_skew(4, 0, 1), RationalMatrix(4, 4, Rational(1))};
  CHECK(kind_of([&] { LinearCongruence::from_matrices(3, bad); }) == ErrorKind::NotSkew);
  CHECK(kind_of([&] { LinearCongruence::from_matrices(3, {elementary_skew(4, 0, 1)}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { DeterminantalCongruence::from_coefficients(3, std::vector<Rational>(5)); }) ==
        ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { DeterminantalCongruence::from_coefficients(3, std::vector<Rational>(24)); }) ==
        ErrorKind::NotGeneric);
}

TEST_CASE("lines through random points of linear congruences") {
  const auto c = random_linear_congruence(5, 42);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const ProjPoint p = probe_point(5, 42, trial);
    const ProjLine l = line_through_point(c, p);
    CHECK(l.contains(p));
    for (const auto& r : membership_residuals(c, l)) CHECK(r == 0);

    // A second point of the same line returns the same line.
    const auto other = l.point_at(3, -2);
    const ProjPoint q{std::span<const Rational>(other)};
    if (q != p && !is_focal_point(c, q)) CHECK(line_through_point(c, q) == l);
  }
}

TEST_CASE("fundamental points of linear congruences") {
  SUBCASE("even n: kernel of A_1") {
    const auto c = random_linear_congruence(4, 11);
    const RankKernel rk = rank_and_kernel(c.matrices()[0]);
    REQUIRE_FALSE(rk.kernel.empty());
    const ProjPoint p{std::span<const Rational>(rk.kernel[0])};
    CHECK(is_focal_point(c, p));
    CHECK(kind_of([&] { line_through_point(c, p); }) == ErrorKind::KernelTooBig);
  }
  SUBCASE("odd n with a degenerate member of the pencil") {
    const RationalMatrix a2 = seeded_random_matrix(99, 4, 4, 9, true);
    const auto c = LinearCongruence::from_matrices(3, {elementary_skew(4, 0, 1), a2});
    const ProjPoint p{0, 0, 1, 0};
    CHECK(is_focal_point(c, p));
    CHECK(kind_of([&] { line_through_point(c, p); }) == ErrorKind::KernelTooBig);
  }
}

TEST_CASE("determinantal lines") {
  const auto c = random_determinantal_congruence(4, 3);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const ProjPoint p = probe_point(4, 3, trial);
    const DeterminantalLine dl = line_through_point(c, p);
    CHECK(dl.line.contains(p));
    for (const auto& f : combined_row_on_line(c, dl.row_combination, dl.line)) CHECK(f.is_zero());
  }
}

TEST_CASE("focal slices have length n-1 on congruence lines") {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Congruence lin = random_linear_congruence(n, seed);
      const Congruence det = random_determinantal_congruence(n, seed);
      for (const Congruence* c : {&lin, &det})
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
          const ProjPoint p = probe_point(n, seed, trial);
          if (is_focal_point(*c, p)) continue;
          const ProjLine l = line_through_point(*c, p);
          const FocalSliceReport r = focal_points_on_line(*c, l);
          CHECK(r.gcd_degree == n - 1);
          CHECK(focal_points_on_line(*c, l.swapped()).gcd_degree == r.gcd_degree);
          for (const auto& x : rational_focal_points(r, l)) CHECK(is_focal_point(*c, x));
        }
    }
}

TEST_CASE("a line outside the congruence is only reported") {
  const auto c = random_linear_congruence(5, 7);
  const ProjLine l(probe_point(5, 1000, 0), probe_point(5, 1000, 1));
  const FocalSliceReport r = focal_points_on_line(c, l);
  CHECK(r.minors.size() == 15);
  CHECK(r.gcd_degree >= 0);
  CHECK_FALSE(r.focal_line);
}

TEST_CASE("random points are not focal") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK_FALSE(is_focal_point(random_linear_congruence(4, seed), probe_point(4, seed + 500, 0)));
    CHECK_FALSE(is_focal_point(random_determinantal_congruence(4, seed), probe_point(4, seed + 500, 0)));
  }
}

TEST_CASE("Pfaffian of the skew pencil") {
  for (int n : {3, 5, 7})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto c = random_linear_congruence(n, seed);
      const MultiPoly pf = pfaffian_polynomial(c);
      CHECK(pf.variable_count() == static_cast<std::size_t>(n - 1));
      CHECK(pf.is_homogeneous());
      CHECK(pf.total_degree() == (n + 1) / 2);
      if (n <= 5) CHECK(pf * pf == skew_combination_determinant(c));
    }
  const auto even = random_linear_congruence(4, 1);
  CHECK(kind_of([&] { pfaffian_polynomial(even); }) == ErrorKind::EvenDimension);
  CHECK(skew_combination_determinant(even).is_zero());
  CHECK(skew_combination(even).rows() == 5);
}

TEST_CASE("order checks") {
  const Congruence det = random_determinantal_congruence(4, 2);
  const OrderReport a = order_check(det, 25, 9);
  CHECK(a.trials == 25);
  CHECK(a.successes + a.focal_probes == 25);
  CHECK(a.successes == 25);
  CHECK(a.pass());

  const Congruence lin = random_linear_congruence(5, 2);
  const OrderReport b = order_check(lin, 25, 9);
  CHECK(b.successes == 25);
  CHECK(b.pass());
  for (const auto& p : b.probes) {
    REQUIRE(p.line.has_value());
    CHECK(p.line->contains(p.point));
    CHECK(p.diagnostic.empty());
  }
  CHECK(kind_of([&] { order_check(lin, 0, 1); }) == ErrorKind::InvalidArgument);

  // A probe on a fundamental point is skipped, not counted as a failure.
  const OrderReport cubic = order_check(DeterminantalCongruence::twisted_cubic(), 10, 1);
  CHECK(cubic.pass());
}

TEST_CASE("probe points are deterministic") {
  CHECK(probe_point(5, 3, 4) == probe_point(5, 3, 4));
  CHECK(probe_point(5, 3, 4) != probe_point(5, 3, 5));
  const ProjPoint small = probe_point(6, 1, 0, 2);
  for (const auto& x : small.coords()) CHECK(abs(x) <= 2);
}

TEST_CASE("congruence files round-trip") {
  const Congruence lin = random_linear_congruence(4, 5);
  const Congruence det = random_determinantal_congruence(3, 5);
  for (const Congruence* c : {&lin, &det}) {
    const std::string text = serialize(*c);
    const Congruence back = parse_congruence(text);
    CHECK(serialize(back) == text);
    CHECK(kind_name(back) == kind_name(*c));
  }
  const std::string cubic = serialize(DeterminantalCongruence::twisted_cubic());
  CHECK(cubic == "n 3\nkind determinantal\n1 0 0 0 | 0 1 0 0\n0 1 0 0 | 0 0 1 0\n0 0 1 0 | 0 0 0 1\n");

  const std::string path = "roundtrip_test.cong";
  save_congruence(lin, path);
  CHECK(serialize(load_congruence(path)) == serialize(lin));
  std::remove(path.c_str());
}

TEST_CASE("congruence file parsing") {
  const std::string commented =
      "# twisted cubic\n"
      "n 3\n"
      "kind determinantal   # catalecticant\n"
      "\n"
      "2/2 0 0 0 | 0 1 0 0\n"
      "0 1 0 0 | 0 0 1 0\n"
      "0 0 1 0 | 0 0 0 1\n";
  CHECK(serialize(parse_congruence(commented)) == serialize(DeterminantalCongruence::twisted_cubic()));

  const auto parse_kind = [](const std::string& text) { return kind_of([&] { parse_congruence(text); }); };
  CHECK(parse_kind("") == ErrorKind::Parse);
  CHECK(parse_kind("n 3\nkind sphere\n") == ErrorKind::Parse);
  CHECK(parse_kind("n x\nkind linear\n") == ErrorKind::Parse);
  CHECK(parse_kind("n 3\nkind determinantal\n1 0 0 | 0 1 0 0\n0 1 0 0 | 0 0 1 0\n0 0 1 0 | 0 0 0 1\n") ==
        ErrorKind::Parse);
  CHECK(parse_kind("n 3\nkind determinantal\n1 0 0 0 | 0 1 0 0\n") == ErrorKind::Parse);
  CHECK(parse_kind("n 3\nkind linear\nmatrix 1\n0 1 0 0\n-1 0 0 0\n0 0 0 0\n0 0 0 0\n") == ErrorKind::Parse);
  CHECK(parse_kind("n 3\nkind linear\nmatrix 1\n0 1 0 0\n1 0 0 0\n0 0 0 0\n0 0 0 0\n"
                   "matrix 2\n0 0 1 0\n0 0 0 1\n-1 0 0 0\n0 -1 0 0\n") == ErrorKind::NotSkew);
  try {
    parse_congruence("n 3\nkind determinantal\n1 0 0 0 | 0 1 0 0\n0 1 0 q | 0 0 1 0\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(kind_of([] { load_congruence("/nonexistent/file.cong"); }) == ErrorKind::Io);
}
