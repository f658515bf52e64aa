#include <doctest.h>

#include "divisibility.hpp"
#include "errors.hpp"
#include "gradedring.hpp"
#include "linalg.hpp"
#include "../support/oracles.hpp"

using namespace flagcalc;

namespace {

// Number of partitions with at most k parts, each at most m, of size d.
int partitions_in_box(int k, int m, int d) {
  if (d == 0) return 1;
  if (k == 0 || m == 0 || d < 0) return 0;
  // Largest part is exactly m, or all parts at most m-1.
  return partitions_in_box(k - 1, m, d - m) + partitions_in_box(k, m - 1, d);
}

}  // namespace

TEST_CASE("polynomial parsing and printing round trip") {
  const auto r = RingPresentation::from_strings("T", {{"a", 1}, {"b", 2}}, {"b^2 - a^4"});
  const auto p = r.parse_poly("3*a^2*b - 1/2*a^4 + b^2");
  CHECK(r.format(p) == r.format(r.parse_poly(r.format(p))));
  CHECK(r.degree_of(p) == 4);
  CHECK_THROWS_AS(r.parse_poly("a + c"), ParseError);
  CHECK_THROWS_AS(r.parse_poly("a^"), ParseError);
}

TEST_CASE("export format round trip") {
  const auto r = RingPresentation::from_strings("Rt", {{"u", 1}, {"v", 3}}, {"v^2 - 4*u^3*v + 2*u^6", "u^8"});
  const auto again = RingPresentation::parse(r.export_text());
  CHECK(again.name() == "Rt");
  CHECK(again.export_text() == r.export_text());
  CHECK(hilbert_series(again, 10) == hilbert_series(r, 10));
  CHECK_THROWS_AS(RingPresentation::parse("gens u:1;\nu^2\n"), ParseError);
}

TEST_CASE("inhomogeneous relations are rejected") {
  CHECK_THROWS_AS(RingPresentation::from_strings("Bad", {{"a", 1}, {"b", 2}}, {"a + b"}), InvalidInput);
}

TEST_CASE("projective space: H^(m+1) = 0") {
  for (int m = 1; m <= 6; ++m) {
    const auto r = RingPresentation::from_strings("P", {{"H", 1}}, {"H^" + std::to_string(m + 1)});
    CHECK(hilbert_series(r, m + 2) == [&] {
      std::vector<int> h(m + 3, 0);
      for (int i = 0; i <= m; ++i) h[i] = 1;
      return h;
    }());
    CHECK(total_dimension(r) == m + 1);
    CHECK(top_degree(r) == m);
  }
}

TEST_CASE("Grassmannian rings have Gaussian-binomial Hilbert series") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 6}, {2, 7}}) {
    CAPTURE(k);
    CAPTURE(n);
    const auto r = grassmannian_ring(k, n);
    const int top = k * (n - k);
    const auto h = hilbert_series(r, top + 1);
    for (int d = 0; d <= top + 1; ++d) CHECK(h[d] == partitions_in_box(k, n - k, d));
    CHECK(total_dimension(r) == oracle::binomial(n, k));
  }
}

TEST_CASE("normal forms and membership") {
  const auto r = RingPresentation::from_strings("Q", {{"x", 1}, {"y", 2}}, {"y^2 - x^2*y", "x^3 - 2*x*y"});
  CHECK(ideal_contains(r, r.parse_poly("x*y^2 - x^3*y")));
  CHECK_FALSE(ideal_contains(r, r.parse_poly("x^2")));
  const auto a = normal_form(r, "x^3");
  const auto b = normal_form(r, "2*x*y");
  CHECK(a == b);
  const auto prod = multiply(normal_form(r, "x"), normal_form(r, "x^2"));
  CHECK(prod == a);
  CHECK(add(a, scale(b, -1)).is_zero());
}

TEST_CASE("degree slices are in reduced echelon form") {
  const auto r = grassmannian_ring(2, 5);
  for (int d = 0; d <= 7; ++d) {
    const auto& s = r.slice(d);
    CHECK(static_cast<int>(s.basis.size() + s.pivots.size()) == static_cast<int>(s.monomials.size()));
    CHECK(matrix_rank(s.rows, static_cast<int>(s.monomials.size())) == static_cast<int>(s.pivots.size()));
    CHECK(ideal_slice_dim(r, d) == static_cast<int>(s.pivots.size()));
  }
}

TEST_CASE("irreducibility of a quadratic in one variable") {
  const auto r = RingPresentation::from_strings("I", {{"X1", 1}, {"X3", 3}}, {"X1^10"});
  CHECK(is_irreducible_quadratic_in(r, r.parse_poly("X3^2 - 4*X1^3*X3 + 2*X1^6"), "X3"));
  CHECK_FALSE(is_irreducible_quadratic_in(r, r.parse_poly("X3^2 - 4*X1^3*X3 + 4*X1^6"), "X3"));
  CHECK_FALSE(is_irreducible_quadratic_in(r, r.parse_poly("X3^2 - X1^6"), "X3"));
}

TEST_CASE("exact linear algebra") {
  Matrix m = {{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  CHECK(matrix_rank(m, 3) == 2);
  CHECK(determinant(m) == 0);
  const auto ker = kernel(m, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (int j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
    CHECK(dot == 0);
  }
  CHECK(determinant({{Rational(1, 2), 1}, {3, 4}}) == Rational(-1));
}
