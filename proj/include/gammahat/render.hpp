#pragma once

// Text, LaTeX-like and JSON renderings, plus the JSON readers used for
// round trips.
//
// Plain-text conventions:
//  * Chern monomials are listed in the canonical partition order
//    (reverse lexicographic: c4, c3c1, c2^2, c2c1^2, c1^4), factors with
//    the largest index first.
//  * Chern terms whose coefficient is a rational multiple of one zeta
//    monomial are grouped under that monomial at the position of the first
//    member, with the signed rational gcd factored out so the inner
//    coefficients are coprime integers and the first is positive.
//  * Inside a coefficient, positive terms come first; ties are broken by
//    zeta weight and then by ascending zeta index (so zeta(2)zeta(3)).
//  * Rationals with a Unicode vulgar-fraction glyph print as that glyph
//    (1/2 -> ½); other non-integers print as (p/q).

#include <string>
#include <string_view>

#include "gammahat/coeffring.hpp"
#include "gammahat/genus.hpp"
#include "gammahat/regprod.hpp"
#include "gammahat/series.hpp"

namespace gammahat {

enum class Format { plain, latex, json };

std::optional<Format> parse_format(std::string_view name);

/// Applies the even-zeta normal form for display when `reduced` is set.
ZetaPoly display_form(const ZetaPoly& p, bool reduced);

std::string render_zeta_poly(const ZetaPoly& p, Format format);
std::string render_chern_polynomial(const ChernPolynomial& poly, Format format);
std::string render_value(const ZetaPoly& p, Format format, bool reduced);
std::string render_sequence(const MultiplicativeSequence& seq, Format format, bool reduced);
std::string render_series(const PowerSeries& s, Format format);
std::string render_radical(const RadicalScalar& x, Format format);
std::string render_pontryagin(const PontryaginExpr& expr, Format format);
std::string render_euler_class(const RegEulerClass& e, Format format);

/// Reads the "terms" array written by render_value(..., Format::json, ...).
ZetaPoly zeta_poly_from_json(std::string_view text);
MultiplicativeSequence sequence_from_json(std::string_view text);

/// Replaces ASCII '-' with U+2212 for plain output.
std::string unicode_minus(std::string_view s);

}  // namespace gammahat
