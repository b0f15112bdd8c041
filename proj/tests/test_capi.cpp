#include "doctest.h"

#include <string>

#include "gammahat/gammahat.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gh_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("sequence through the C interface") {
  gh_sequence* seq = nullptr;
  REQUIRE(gh_sequence_create("gamma-hat", 3, &seq) == GH_OK);
  char* text = nullptr;
  REQUIRE(gh_sequence_render(seq, GH_FORMAT_PLAIN, 0, &text) == GH_OK);
  CHECK(take(text) == "1\t0\n2\t½ζ(2)(2c₂ − c₁²)\n3\t⅓ζ(3)(3c₃ − 3c₂c₁ + c₁³)\n");

  gh_sequence* hoff = nullptr;
  REQUIRE(gh_sequence_create_hoffman(3, &hoff) == GH_OK);
  CHECK(gh_sequence_equal(seq, hoff) == 1);

  REQUIRE(gh_sequence_render(seq, GH_FORMAT_JSON, 0, &text) == GH_OK);
  gh_sequence* back = nullptr;
  REQUIRE(gh_sequence_from_json(text, &back) == GH_OK);
  gh_string_free(text);
  CHECK(gh_sequence_equal(seq, back) == 1);

  gh_sequence_free(seq);
  gh_sequence_free(hoff);
  gh_sequence_free(back);
}

TEST_CASE("genus values through the C interface") {
  gh_manifold* m = nullptr;
  REQUIRE(gh_manifold_parse("cpn:2", &m) == GH_OK);
  CHECK(gh_manifold_dimension(m) == 2);
  gh_sequence* seq = nullptr;
  REQUIRE(gh_sequence_create("gamma-hat", 2, &seq) == GH_OK);
  gh_value* v = nullptr;
  REQUIRE(gh_genus_evaluate(seq, m, &v) == GH_OK);
  char* text = nullptr;
  REQUIRE(gh_value_render(v, GH_FORMAT_PLAIN, 1, &text) == GH_OK);
  CHECK(take(text) == "−(3/2)ζ(2)");
  REQUIRE(gh_value_numeric(v, 30, 15, &text) == GH_OK);
  CHECK(take(text) == "-2.467401100272340");

  REQUIRE(gh_value_render(v, GH_FORMAT_JSON, 1, &text) == GH_OK);
  gh_value* w = nullptr;
  REQUIRE(gh_value_from_json(text, &w) == GH_OK);
  gh_string_free(text);
  CHECK(gh_value_equal(v, w) == 1);

  REQUIRE(gh_manifold_to_json(m, &text) == GH_OK);
  gh_manifold* m2 = nullptr;
  REQUIRE(gh_manifold_from_json(text, &m2) == GH_OK);
  gh_string_free(text);
  CHECK(gh_manifold_dimension(m2) == 2);

  gh_value_free(v);
  gh_value_free(w);
  gh_manifold_free(m);
  gh_manifold_free(m2);
  gh_sequence_free(seq);
}

TEST_CASE("error codes and messages") {
  gh_sequence* seq = nullptr;
  CHECK(gh_sequence_create("nope", 3, &seq) == GH_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gh_last_error()).find("nope") != std::string::npos);
  CHECK(seq == nullptr);
  CHECK(gh_sequence_create("todd", 99, &seq) == GH_ERR_GUARD);
  CHECK(gh_sequence_create(nullptr, 3, &seq) == GH_ERR_INVALID_ARGUMENT);

  gh_manifold* m = nullptr;
  CHECK(gh_manifold_parse("product(k3", &m) == GH_ERR_PARSE);
  CHECK(gh_manifold_from_json("{\"complex_dimension\": 1}", &m) == GH_ERR_PARSE);

  REQUIRE(gh_sequence_create("todd", 1, &seq) == GH_OK);
  REQUIRE(gh_manifold_parse("k3", &m) == GH_OK);
  gh_value* v = nullptr;
  CHECK(gh_genus_evaluate(seq, m, &v) == GH_ERR_DIMENSION);
  gh_manifold_free(m);
  gh_sequence_free(seq);

  char* text = nullptr;
  CHECK(gh_regprod("0", 1, GH_FORMAT_PLAIN, &text) == GH_ERR_NOT_REPRESENTABLE);
  CHECK(gh_regprod("u^(1/2)", 1, GH_FORMAT_PLAIN, &text) == GH_ERR_NOT_REPRESENTABLE);
  CHECK(gh_regprod("u/(", 1, GH_FORMAT_PLAIN, &text) == GH_ERR_PARSE);
  CHECK(gh_psireg(0, 2, 0, 30, GH_FORMAT_PLAIN, &text) == GH_ERR_GUARD);
  CHECK(gh_psireg(10, 9, 0, 30, GH_FORMAT_PLAIN, &text) == GH_ERR_GUARD);
  CHECK(gh_psireg(10, 2, 1, 5, GH_FORMAT_PLAIN, &text) == GH_ERR_PRECISION);
  CHECK(gh_hoffman("1,2", "Z", &v) == GH_ERR_PARSE);
  CHECK(gh_hoffman("2", "W", &v) == GH_ERR_INVALID_ARGUMENT);
  CHECK(gh_reg_euler(1, 2, 0, GH_FORMAT_PLAIN, &text) == GH_ERR_INVALID_ARGUMENT);

  // A successful call clears the message.
  REQUIRE(gh_regprod("1", 1, GH_FORMAT_PLAIN, &text) == GH_OK);
  CHECK(take(text) == "√(2π)");
  CHECK(std::string(gh_last_error()).empty());
}

TEST_CASE("hoffman, regularized products and psi_reg") {
  gh_value* v = nullptr;
  char* text = nullptr;
  REQUIRE(gh_hoffman("1", "Z", &v) == GH_OK);
  REQUIRE(gh_value_render(v, GH_FORMAT_PLAIN, 0, &text) == GH_OK);
  CHECK(take(text) == "γ");
  gh_value_free(v);

  REQUIRE(gh_regprod("u/(2pi)", 3, GH_FORMAT_PLAIN, &text) == GH_OK);
  CHECK(take(text) == "(2π)³·u^{−3/2}");
  REQUIRE(gh_psireg(1, 2, 0, 30, GH_FORMAT_PLAIN, &text) == GH_OK);
  CHECK(take(text) == "1 + 0·z − 1/2·z²\n");
  REQUIRE(gh_reg_euler(2, 2, 1, GH_FORMAT_PLAIN, &text) == GH_OK);
  CHECK(take(text).rfind("prefactor\t", 0) == 0);
  CHECK(std::string(gh_version()).size() > 0);
}
