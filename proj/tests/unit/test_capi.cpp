#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagcalc/flagcalc.h"

#include <json.hpp>

#include <string>
#include <thread>

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  fc_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(fc_status_name(FC_OK)) == "ok");
  CHECK(std::string(fc_status_name(FC_ERR_NOT_COVERED)) == "not-covered");
  int d = 0;
  CHECK(fc_dimension("Z3/P1", &d) == FC_ERR_PARSE);
  CHECK(std::string(fc_last_error()).find("<FAMILY><rank>") != std::string::npos);
  CHECK(fc_dimension("B3/P7", &d) == FC_ERR_INVALID);
  CHECK(fc_dimension(nullptr, &d) == FC_ERR_INVALID);
  CHECK(fc_dimension("E6/P2", &d) == FC_OK);
  CHECK(d == 21);
  CHECK(std::string(fc_last_error()).empty());
}

TEST_CASE("last error is per thread") {
  int d = 0;
  CHECK(fc_dimension("Q9/P1", &d) == FC_ERR_PARSE);
  std::string other;
  std::thread t([&] { other = fc_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(fc_last_error()).empty());
}

TEST_CASE("info") {
  char* out = nullptr;
  REQUIRE(fc_info(nullptr, "G2/P1", &out) == FC_OK);
  const Json j = take(out);
  CHECK(j["dimension"] == 5);
  CHECK(j["catalog"]["a"] == 1);
  CHECK(j["catalog"]["ed"]["value"] == 1);
  CHECK(j["catalog"]["vmrt"]["text"] == "twisted cubic curve in P^3");

  REQUIRE(fc_info(nullptr, "A3/P1,2", &out) == FC_OK);
  const Json k = take(out);
  CHECK(k["catalog"].is_null());
  CHECK(k["not_covered"].is_string());
}

TEST_CASE("catalog handles") {
  fc_catalog* c = nullptr;
  REQUIRE(fc_catalog_builtin(&c) == FC_OK);
  char* out = nullptr;
  int passed = 0;
  REQUIRE(fc_table_verify(c, 1, &out, &passed) == FC_OK);
  CHECK(passed == 1);
  CHECK(take(out)["failed_rows"] == 0);
  CHECK(fc_table_verify(c, 0, &out, &passed) == FC_ERR_INVALID);
  fc_catalog_free(c);

  CHECK(fc_catalog_load("/nonexistent/catalog", &c) != FC_OK);
}

TEST_CASE("proofs") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(fc_prove("gd-og510", nullptr, &out, &passed) == FC_OK);
  CHECK(passed == 1);
  const Json j = take(out);
  CHECK(j["steps"].size() == 3);
  CHECK(j["results"]["gd"] == 7);

  const char* mutated = "ring M; gens X1:1,X3:3;\nX3^2 - 4*X1^3*X3 + 4*X1^6\n12*X1^5*X3 - 7*X1^8\n";
  REQUIRE(fc_prove("gd-og510", mutated, &out, &passed) == FC_OK);
  CHECK(passed == 0);
  CHECK(take(out)["steps"][0]["status"] == "fail");

  CHECK(fc_prove("nonsense", nullptr, &out, &passed) == FC_ERR_PARSE);
}

TEST_CASE("verdicts") {
  char* out = nullptr;
  REQUIRE(fc_split(nullptr, "D5/P5", "3,3,2,1,0", &out) == FC_OK);
  Json j = take(out);
  CHECK(j["outcome"] == "SPLITS");
  CHECK(j["rule"] == "leading-block-below-a");
  CHECK(j["witnesses"].size() >= 2);

  REQUIRE(fc_morphism("A4/P2", "B7/Pminus7", &out) == FC_OK);
  j = take(out);
  CHECK(j["outcome"] == "CONSTANT");
  CHECK(j["rule"] == "bc-quartic-induction");

  REQUIRE(fc_witness(nullptr, "E6/P2", &out) == FC_OK);
  j = take(out);
  CHECK(j["rank"] == 6);
  CHECK(j["verdict"]["outcome"] == "UNSPLIT-EXISTS");

  CHECK(fc_split(nullptr, "A3/P1,2", "1,0", &out) == FC_ERR_NOT_COVERED);
  CHECK(fc_witness(nullptr, "B7/P5", &out) == FC_ERR_NOT_COVERED);
  CHECK(fc_split(nullptr, "A3/P1", "0,1", &out) == FC_ERR_INVALID);
}

TEST_CASE("obstructions") {
  char* out = nullptr;
  REQUIRE(fc_obstruction("B4/Pminus4", "quadric-4", &out) == FC_OK);
  const Json j = take(out);
  CHECK(j["verdict"] == "forces-zero");
  CHECK(j["equations"].size() == 1);
  CHECK(fc_obstruction("B4/Pminus4", "cube", &out) == FC_ERR_PARSE);
}

TEST_CASE("rings") {
  fc_ring* r = nullptr;
  REQUIRE(fc_ring_builtin("OG510", &r) == FC_OK);
  char* out = nullptr;
  REQUIRE(fc_ring_degree(r, 7, &out) == FC_OK);
  Json j = take(out);
  CHECK(j["ideal_slice_dim"] == 1);
  CHECK(j["dimension"] == 2);

  int in = -1;
  REQUIRE(fc_ring_contains(r, "12*X1^5*X3 - 7*X1^8", &in) == FC_OK);
  CHECK(in == 1);
  REQUIRE(fc_ring_contains(r, "X1^5", &in) == FC_OK);
  CHECK(in == 0);
  CHECK(fc_ring_contains(r, "X2", &in) == FC_ERR_PARSE);

  REQUIRE(fc_ring_normal_form(r, "X3^2", &out) == FC_OK);
  CHECK(std::string(out) == "4*X1^3*X3 - 2*X1^6");
  fc_string_free(out);

  REQUIRE(fc_ring_export(r, &out) == FC_OK);
  fc_ring* again = nullptr;
  REQUIRE(fc_ring_parse(out, &again) == FC_OK);
  fc_string_free(out);
  REQUIRE(fc_ring_summary(again, &out) == FC_OK);
  j = take(out);
  CHECK(j["total_dimension"] == 16);
  fc_ring_free(again);
  fc_ring_free(r);

  for (const char* name : {"SG26", "OG27", "Q4", "BC4", "P3", "Gr2_5"}) {
    CAPTURE(name);
    REQUIRE(fc_ring_builtin(name, &r) == FC_OK);
    fc_ring_free(r);
  }
  CHECK(fc_ring_builtin("Banana", &r) == FC_ERR_PARSE);
  CHECK(fc_ring_builtin("P0", &r) == FC_ERR_INVALID);
}
