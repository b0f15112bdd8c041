#include "doctest.h"

#include "json.hpp"

#include "gammahat/error.hpp"
#include "gammahat/render.hpp"

using namespace gammahat;

namespace {

const ZetaPoly z2 = ZetaPoly::zeta(2), z3 = ZetaPoly::zeta(3), z4 = ZetaPoly::zeta(4), z5 = ZetaPoly::zeta(5);

std::string plain(const ZetaPoly& p) { return render_zeta_poly(p, Format::plain); }

}  // namespace

TEST_CASE("formats by name") {
  CHECK(parse_format("plain") == Format::plain);
  CHECK(parse_format("latex") == Format::latex);
  CHECK(parse_format("json") == Format::json);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("zeta polynomials") {
  CHECK(plain(ZetaPoly()) == "0");
  CHECK(plain(ZetaPoly(make_rational(-7, 3))) == "−(7/3)");
  CHECK(plain(ZetaPoly::gamma()) == "γ");
  CHECK(plain(make_rational(1, 2) * z2) == "½ζ(2)");
  CHECK(plain(make_rational(-3, 2) * z2) == "−(3/2)ζ(2)");
  CHECK(plain(make_rational(105, 16) * z4) == "(105/16)ζ(4)");
  CHECK(plain(make_rational(6, 5) * z5 - ZetaPoly(6L) * z2 * z3) == "(6/5)ζ(5) − 6ζ(2)ζ(3)");
  CHECK(plain(z2 * z2) == "ζ(2)²");
  CHECK(render_zeta_poly(make_rational(-3, 2) * z2, Format::latex) == "-\\frac{3}{2}\\zeta(2)");
}

TEST_CASE("reduced display rewrites powers of zeta(2)") {
  CHECK(render_value(z2 * z2, Format::plain, true) == "(5/2)ζ(4)");
  CHECK(render_value(z2 * z2, Format::plain, false) == "ζ(2)²");
  CHECK(render_value(z2 * z2 - make_rational(5, 2) * z4, Format::plain, true) == "0");
}

TEST_CASE("gamma-hat sequence in free mode") {
  const auto seq = builtin_sequence(GenusKind::gamma_hat, 5);
  CHECK(render_chern_polynomial(seq.degree(1), Format::plain) == "0");
  CHECK(render_chern_polynomial(seq.degree(2), Format::plain) == "½ζ(2)(2c₂ − c₁²)");
  CHECK(render_chern_polynomial(seq.degree(3), Format::plain) == "⅓ζ(3)(3c₃ − 3c₂c₁ + c₁³)");
  CHECK(render_chern_polynomial(seq.degree(4), Format::plain) ==
        "ζ(4)(c₄ − c₃c₁) + (½ζ(2)² − ½ζ(4))c₂² + (ζ(4) − ½ζ(2)²)c₂c₁² + (⅛ζ(2)² − ¼ζ(4))c₁⁴");
  CHECK(render_sequence(seq, Format::plain, false).substr(0, 4) == "1\t0\n");
}

TEST_CASE("Todd polynomials") {
  const auto seq = builtin_sequence(GenusKind::todd, 2);
  CHECK(render_chern_polynomial(seq.degree(1), Format::plain) == "½c₁");
  CHECK(render_chern_polynomial(seq.degree(2), Format::plain) == "(1/12)(c₂ + c₁²)");
}

TEST_CASE("series and radicals") {
  CHECK(render_series(psi_reg_partial_product(1, 2), Format::plain) == "1 + 0·z − 1/2·z²");
  CHECK(render_radical(RadicalScalar(1, 1, 6, -3), Format::plain) == "(2π)³·u^{−3/2}");
  CHECK(render_radical(RadicalScalar::sqrt_two_pi(), Format::plain) == "√(2π)");
  CHECK(render_radical(RadicalScalar(make_rational(1, 2), 1, 1, 0), Format::plain) == "½·√(2π)");
  CHECK(render_radical(RadicalScalar(1, 1, 6, -3), Format::latex) == "(2\\pi)^{3} \\cdot u^{-3/2}");
  const auto doc = nlohmann::json::parse(render_radical(RadicalScalar(3, 2, 1, -2), Format::json));
  CHECK(doc["radicand"] == "2");
  CHECK(doc["u_half_exponent"] == -2);
}

TEST_CASE("Pontryagin rendering") {
  auto r = pontryagin_reduce(builtin_sequence(GenusKind::gamma_hat, 4), 4);
  REQUIRE(r.has_value());
  CHECK(render_pontryagin(*r, Format::plain) == "½ζ(4)p₂ + (⅛ζ(2)² − ¼ζ(4))p₁²");
}

TEST_CASE("value JSON round trip") {
  const ZetaPoly values[] = {ZetaPoly(), make_rational(6, 5) * z5 - ZetaPoly(6L) * z2 * z3,
                             ZetaPoly::gamma().pow(3) + make_rational(-1, 7), z2 * z2 * z4};
  for (const auto& v : values) {
    for (bool reduced : {false, true}) {
      const std::string json = render_value(v, Format::json, reduced);
      const ZetaPoly back = zeta_poly_from_json(json);
      CHECK(equal_reduced(back, v));
      CHECK(render_value(back, Format::json, reduced) == json);
      CHECK(render_value(back, Format::plain, reduced) == render_value(v, Format::plain, reduced));
    }
  }
}

TEST_CASE("sequence JSON round trip") {
  for (GenusKind kind : {GenusKind::gamma_hat, GenusKind::gamma, GenusKind::todd}) {
    const auto seq = builtin_sequence(kind, 6);
    CHECK(sequence_from_json(render_sequence(seq, Format::json, false)) == seq);
    const std::string reduced = render_sequence(seq, Format::json, true);
    CHECK(render_sequence(sequence_from_json(reduced), Format::json, true) == reduced);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(zeta_poly_from_json("{"), Error);
  CHECK_THROWS_AS(zeta_poly_from_json(R"({"terms": [{"coefficient": "1/0", "monomial": {}}]})"), Error);
  CHECK_THROWS_AS(zeta_poly_from_json(R"J({"terms": [{"coefficient": "1", "monomial": {"zeta(1)": 1}}]})J"), Error);
  CHECK_THROWS_AS(zeta_poly_from_json(R"({"terms": [{"coefficient": "1", "monomial": {"beta": 1}}]})"), Error);
  CHECK_THROWS_AS(sequence_from_json(R"({"max_degree": 2})"), Error);
  CHECK_THROWS_AS(sequence_from_json(
                      R"({"max_degree": 2, "degrees": [{"degree": 2, "coefficients": [{"partition": "1", "terms": []}]}]})"),
                  Error);
}

TEST_CASE("unicode minus") {
  CHECK(unicode_minus("-2.5") == "−2.5");
  CHECK(unicode_minus("3") == "3");
}
