#include <doctest.h>

#include "errors.hpp"
#include "vmrtcatalog.hpp"

#include <algorithm>

using namespace flagcalc;

namespace {

VmrtEntry entry(const char* x) { return Catalog::builtin().entry(MarkedDynkin::parse(x)); }

}  // namespace

TEST_CASE("expression and condition evaluation") {
  const std::map<char, int> v{{'n', 7}, {'k', 3}};
  CHECK(eval_expr("2n-2k-1", v) == 7);
  CHECK(eval_expr("min(k-1, 2n-2k-1)", v) == 2);
  CHECK(eval_expr("(n+1)*k", v) == 24);
  CHECK(eval_condition("2<=k<=n-2", v));
  CHECK_FALSE(eval_condition("k>=n-1", v));
  CHECK(eval_condition("n!=4", v));
  CHECK_THROWS_AS(eval_expr("n+", v), ParseError);
  CHECK_THROWS_AS(eval_expr("m", v), ParseError);
}

TEST_CASE("vmrt descriptors") {
  const auto d = parse_vmrt("P(2) x Q(5) x Gr(2,5)", {});
  REQUIRE(d.factors.size() == 3);
  CHECK(d.dimension() == 2 + 5 + 6);
  CHECK(d.to_string() == "P^2 x Q^5 x Gr(2,5)");
  const auto b = parse_vmrt("bundle(P(k-1),2n-2k)", {{'n', 5}, {'k', 3}});
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].part_dimensions() == std::vector<int>{2, 4});
  CHECK(b.dimension() == 6);
  CHECK_THROWS_AS(parse_vmrt("special(nonsense)", {}), ParseError);
}

TEST_CASE("a(X) is the smallest factor dimension") {
  CHECK(a_of(MarkedDynkin::parse("A6/P3")) == 2);
  CHECK(a_of(MarkedDynkin::parse("B4/P2")) == 1);
  CHECK(a_of(MarkedDynkin::parse("D5/P5")) == 6);
  CHECK(a_of(MarkedDynkin::parse("E7/P5")) == 2);
  CHECK(a_of(MarkedDynkin::parse("C5/P3")) == 2);
}

TEST_CASE("entries for exceptional rows") {
  const auto g2 = entry("G2/P1");
  CHECK(g2.vmrt.dimension() == 1);
  CHECK(g2.a == 1);
  CHECK(g2.ed.value == 1);

  const auto f4 = entry("F4/P4");
  CHECK(f4.vmrt.dimension() == 9);
  CHECK(f4.ed.value == 6);
  CHECK(f4.ed.provenance == Provenance::InPaperProof);

  const auto e6 = entry("E6/P1");
  CHECK(e6.vmrt.to_string() == "D5/P5");
  CHECK(e6.a == 10);
  CHECK(e6.ed.value == 7);
  REQUIRE(e6.ed.gd.has_value());
  CHECK(*e6.ed.gd == 7);

  CHECK(entry("E6/P2").ed.value == 5);
  CHECK(entry("E6/P2").ed.provenance == Provenance::Bruteforce);
}

TEST_CASE("classical rows recompute the min formulas") {
  for (int n = 4; n <= 9; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      const MarkedDynkin x(DynkinType::make(Family::B, n), {k});
      CAPTURE(x.to_string());
      const int expected = std::min(k - 1, 2 * n - 2 * k - 1);
      CHECK(a_of(x) == expected);
      CHECK(ed_vmrt(x).value == expected);
    }
  for (int n = 5; n <= 9; ++n)
    for (int k = 2; k <= n - 3; ++k) {
      const MarkedDynkin x(DynkinType::make(Family::D, n), {k});
      CAPTURE(x.to_string());
      CHECK(a_of(x) == std::min(k - 1, 2 * n - 2 * k - 2));
      CHECK(ed_vmrt(x).value == std::min(k - 1, 2 * n - 2 * k - 3));
    }
}

TEST_CASE("varieties outside the catalog") {
  CHECK_THROWS_AS(Catalog::builtin().entry(MarkedDynkin::parse("A3/P1,2")), NotCovered);
  CHECK_THROWS_AS(Catalog::builtin().entry(MarkedDynkin::parse("B7/Pminus7")), NotCovered);
}

TEST_CASE("catalog text parsing") {
  const auto c = Catalog::parse("A | 1 or n | n>=1 | P^n | P(n-1) | n-1 | n-1 | bruteforce\n", "mini");
  REQUIRE(c.rows().size() == 1);
  CHECK(c.entry(MarkedDynkin::parse("A4/P4")).a == 3);
  CHECK_THROWS_AS(c.entry(MarkedDynkin::parse("A4/P2")), NotCovered);
  CHECK_THROWS_AS(Catalog::parse("A | 1 | n>=1 | P^n | P(n-1) | n-1\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("A | 1 | n>=1 | P^n | P(n-1) | n-1 | n-1 | guesswork\n"), ParseError);
}

TEST_CASE("parameter sampling stays inside the constraints") {
  for (const auto& row : Catalog::builtin().rows()) {
    const auto samples = sample_parameters(row, 3);
    CHECK_FALSE(samples.empty());
    if (row.parameterized()) CHECK(samples.size() <= 3);
    for (const auto& p : samples)
      for (const auto& c : row.constraints) CHECK(eval_condition(c, p));
  }
}

TEST_CASE("table verification and its negative control") {
  const auto report = verify_table(3);
  CHECK(report.passed);
  CHECK(report.failed_rows == 0);
  CHECK(report.rows.size() == Catalog::builtin().rows().size());

  const auto broken = verify_table(Catalog::builtin().with_perturbed_ed(5, 1), 3);
  CHECK_FALSE(broken.passed);
  CHECK(broken.failed_rows == 1);
}
