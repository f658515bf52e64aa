#include <doctest.h>

#include "chowpresentations.hpp"
#include "divisibility.hpp"
#include "errors.hpp"

#include <algorithm>

using namespace flagcalc;

TEST_CASE("projective space models") {
  for (int a = 0; a <= 6; ++a) {
    const auto m = projective_space_model(a);
    CHECK(m.dimension() == a);
    CHECK(static_cast<int>(m.classes().size()) == a + 1);
    CHECK(ed_bruteforce(m).value == a);
  }
}

TEST_CASE("products of two projective spaces: e.d. is the smaller dimension") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto m = product_model(projective_space_model(a), projective_space_model(b));
      CHECK(ed_bruteforce(m).value == std::min(a, b));
    }
}

TEST_CASE("products of three projective spaces") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        const auto m = product_model(product_model(projective_space_model(a), projective_space_model(b)),
                                     projective_space_model(c));
        CHECK(ed_bruteforce(m).value == std::min({a, b, c}));
      }
}

TEST_CASE("product rule agrees with brute force") {
  for (int a = 1; a <= 4; ++a)
    for (int m : {3, 5, 7}) {
      const auto pm = projective_space_model(a);
      const auto qm = quadric_model(m);
      const auto direct = ed_bruteforce(product_model(pm, qm)).value;
      const auto rule = ed_product({ed_bruteforce(pm), ed_bruteforce(qm)});
      CAPTURE(a);
      CAPTURE(m);
      CHECK(rule.value == direct);
      CHECK(rule.provenance == Provenance::ProductRule);
    }
}

TEST_CASE("product rule refuses factors whose g.d. is below e.d.") {
  CHECK(ed_bruteforce(projective_space_model(3)).gd_equals_ed == true);
  CHECK(ed_bruteforce(quadric_model(5)).gd_equals_ed == true);
  CHECK_FALSE(ed_bruteforce(quadric_model(4)).gd_equals_ed.has_value());
  CHECK_THROWS_AS(ed_product({ed_bruteforce(projective_space_model(2)), ed_bruteforce(quadric_model(4))}),
                  RuleNotApplicable);
}

TEST_CASE("quadrics") {
  // Odd quadrics behave like projective space; even ones have two middle
  // classes whose product vanishes.
  CHECK(ed_bruteforce(quadric_model(3)).value == 3);
  CHECK(ed_bruteforce(quadric_model(5)).value == 5);
  CHECK(ed_bruteforce(quadric_model(4)).value == 3);
  CHECK(ed_bruteforce(quadric_model(6)).value == 5);
  const auto detail = ed_bruteforce_detail(quadric4_model_from_ring());
  CHECK(detail.ed.value == 3);
  CHECK(detail.witness.has_value());
}

TEST_CASE("Grassmannian models from Jacobi-Trudi classes") {
  CHECK(ed_bruteforce(grassmannian_model(1, 5)).value == 4);
  CHECK(ed_bruteforce(grassmannian_model(2, 4)).value == ed_bruteforce(quadric_model(4)).value);
  CHECK(ed_bruteforce(grassmannian_model(2, 5)).value == 4);
  CHECK(ed_bruteforce(grassmannian_model(3, 6)).value == 5);
  const auto g = grassmannian_model(2, 5);
  CHECK(g.dimension() == 6);
  CHECK(static_cast<int>(g.classes().size()) == 10);
}

TEST_CASE("relabeling classes does not change e.d.") {
  const auto m = product_model(projective_space_model(2), projective_space_model(3));
  std::vector<int> perm(m.classes().size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(perm.size() - 1 - i);
  CHECK(ed_bruteforce(m.permuted(perm)).value == ed_bruteforce(m).value);
}

TEST_CASE("model text format round trip") {
  const auto m = quadric_model(4);
  const auto again = SchubertModel::parse(m.to_text());
  CHECK(again.to_text() == m.to_text());
  CHECK(ed_bruteforce(again).value == 3);
  CHECK_THROWS_AS(SchubertModel::parse("model broken"), ParseError);
}

TEST_CASE("product bounds and sandwich") {
  const EdValue a{3, Provenance::Bruteforce, true, 3, true, ""};
  const EdValue b{5, Provenance::Bruteforce, true, 5, true, ""};
  const auto bounds = ed_product_bounds({a, b});
  CHECK(bounds.lower <= 3);
  CHECK(bounds.upper == 3);
  CHECK(ed_product_sandwich({a, b}).value == 3);
  const EdValue loose{4, Provenance::ImportedLiterature, false, 2, true, ""};
  CHECK(ed_product_bounds({loose, b}).lower == 2);
  CHECK_THROWS_AS(ed_product_sandwich({loose, b}), RuleNotApplicable);
}

TEST_CASE("projective bundle rule") {
  const EdValue base{4, Provenance::Bruteforce, true, 4, true, ""};
  CHECK(ed_projective_bundle(base, 3).value == 2);
  CHECK(ed_projective_bundle(base, 9).value == 4);
  CHECK(ed_projective_bundle(base, 3).provenance == Provenance::ProjectiveBundleRule);
}

TEST_CASE("good divisibility of OG(5,10) replays") {
  const auto r = verify_gd_OG510();
  CHECK(r.passed);
  REQUIRE(r.steps.size() == 3);
  for (const auto& s : r.steps) CHECK(s.passed);
  CHECK(std::get<int>(r.results.at("gd")) == 7);
}

TEST_CASE("mutated presentations fail the designated step") {
  const auto reducible = RingPresentation::from_strings(
      "M1", {{"X1", 1}, {"X3", 3}}, {"X3^2 - 4*X1^3*X3 + 4*X1^6", "12*X1^5*X3 - 7*X1^8"});
  const auto r1 = verify_gd_OG510(reducible);
  CHECK_FALSE(r1.passed);
  CHECK_FALSE(r1.steps[0].passed);
  CHECK(r1.steps[1].passed);

  const auto extra = RingPresentation::from_strings(
      "M2", {{"X1", 1}, {"X3", 3}}, {"X3^2 - 4*X1^3*X3 + 2*X1^6", "X1^4*X3 - 3*X1^7"});
  const auto r2 = verify_gd_OG510(extra);
  CHECK_FALSE(r2.passed);
  CHECK(r2.steps[0].passed);
  CHECK_FALSE(r2.steps[1].passed);
}

TEST_CASE("e.d. of the F4/P4 VMRT replays") {
  const auto r = verify_ed_F4P4_vmrt();
  CHECK(r.passed);
  CHECK(std::get<int>(r.results.at("lower")) == 6);
  CHECK(std::get<int>(r.results.at("upper")) == 6);
  CHECK(std::get<int>(r.results.at("ed")) == 6);
}

TEST_CASE("vanishing pair search") {
  const auto ring = ring_OG510();
  const auto found = find_vanishing_pair(ring, ring.one(), 5, 3);
  REQUIRE(found.pair.has_value());
  CHECK(ideal_contains(ring, found.pair->u * found.pair->v));
  CHECK_FALSE(find_vanishing_pair(ring, ring.gen("X1"), 3, 3).pair.has_value());
}
