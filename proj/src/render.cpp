#include "gammahat/render.hpp"

#include <algorithm>
#include <numeric>

#include "gammahat/error.hpp"
#include "json.hpp"

namespace gammahat {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kMinus = "−";

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = n < 0 ? "⁻" : "";
  for (char ch : std::to_string(n < 0 ? -n : n)) out += digits[ch - '0'];
  return out;
}

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char ch : std::to_string(n)) out += digits[ch - '0'];
  return out;
}

std::optional<std::string> vulgar_fraction(const Rational& q) {
  static const std::map<std::pair<long, long>, std::string> glyphs = {
      {{1, 2}, "½"}, {{1, 3}, "⅓"}, {{2, 3}, "⅔"}, {{1, 4}, "¼"}, {{3, 4}, "¾"}, {{1, 5}, "⅕"},
      {{2, 5}, "⅖"}, {{3, 5}, "⅗"}, {{4, 5}, "⅘"}, {{1, 6}, "⅙"}, {{5, 6}, "⅚"}, {{1, 7}, "⅐"},
      {{1, 8}, "⅛"}, {{3, 8}, "⅜"}, {{5, 8}, "⅝"}, {{7, 8}, "⅞"}, {{1, 9}, "⅑"}, {{1, 10}, "⅒"}};
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) return std::nullopt;
  auto it = glyphs.find({q.get_num().get_si(), q.get_den().get_si()});
  if (it == glyphs.end()) return std::nullopt;
  return it->second;
}

std::string minus_sign(Format f) { return f == Format::latex ? "-" : std::string(kMinus); }

// |q| as a multiplicative prefix; empty when |q| = 1 and something follows.
std::string rational_prefix(const Rational& q_abs, Format f, bool followed) {
  if (q_abs == 1 && followed) return "";
  if (q_abs.get_den() == 1) return q_abs.get_num().get_str();
  if (f == Format::latex) return "\\frac{" + q_abs.get_num().get_str() + "}{" + q_abs.get_den().get_str() + "}";
  if (auto g = vulgar_fraction(q_abs)) return *g;
  return "(" + q_abs.get_num().get_str() + "/" + q_abs.get_den().get_str() + ")";
}

std::string render_monomial(const ZetaMonomial& m, Format f) {
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    switch (g.kind()) {
      case Generator::Kind::euler_gamma:
        out += f == Format::latex ? "\\gamma" : "γ";
        if (e > 1) out += f == Format::latex ? "^{" + std::to_string(e) + "}" : superscript(e);
        break;
      case Generator::Kind::pi_squared:
        out += f == Format::latex ? "\\pi^{" + std::to_string(2 * e) + "}" : "π" + superscript(2 * e);
        break;
      case Generator::Kind::zeta:
        out += (f == Format::latex ? "\\zeta(" : "ζ(") + std::to_string(g.index()) + ")";
        if (e > 1) out += f == Format::latex ? "^{" + std::to_string(e) + "}" : superscript(e);
        break;
    }
  }
  return out;
}

std::string render_class_monomial(const Partition& lambda, char letter, Format f) {
  if (lambda.empty()) return "";
  std::string out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int e = static_cast<int>(j - i);
    if (f == Format::latex) {
      out += std::string(1, letter) + "_{" + std::to_string(parts[i]) + "}";
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    } else {
      out += std::string(1, letter) + subscript(parts[i]);
      if (e > 1) out += superscript(e);
    }
    i = j;
  }
  return out;
}

struct Term {
  bool negative = false;
  std::string body;
};

std::string join_terms(const std::vector<Term>& terms, Format f) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += minus_sign(f);
    } else {
      out += terms[i].negative ? " " + minus_sign(f) + " " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

std::string open_paren(Format f) { return f == Format::latex ? "\\left(" : "("; }
std::string close_paren(Format f) { return f == Format::latex ? "\\right)" : ")"; }

std::vector<std::pair<ZetaMonomial, Rational>> ordered_terms(const ZetaPoly& p) {
  std::vector<std::pair<ZetaMonomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const bool na = a.second < 0;
    const bool nb = b.second < 0;
    if (na != nb) return !na;
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first < b.first;
  });
  return terms;
}

std::string zeta_poly_text(const ZetaPoly& p, Format f) {
  std::vector<Term> terms;
  for (const auto& [m, c] : ordered_terms(p)) {
    const Rational a = abs(c);
    const std::string mono = render_monomial(m, f);
    terms.push_back({c < 0, rational_prefix(a, f, !mono.empty()) + mono});
  }
  return join_terms(terms, f);
}

// gcd(|q_i|) over rationals: gcd of numerators over lcm of denominators.
Rational rational_gcd(const std::vector<Rational>& qs) {
  Integer num = 0;
  Integer den = 1;
  for (const auto& q : qs) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  return make_rational(num, den);
}

std::string class_polynomial_text(const std::map<Partition, ZetaPoly>& poly, char letter, Format f) {
  struct Item {
    bool grouped = false;
    ZetaMonomial zeta;
    std::vector<std::pair<Partition, Rational>> members;  // grouped items
    Partition lambda;                                      // coefficient items
    ZetaPoly coefficient;
  };
  std::vector<Item> items;
  std::map<ZetaMonomial, std::size_t> group_of;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    const auto& [lambda, c] = *it;
    if (c.is_zero()) continue;
    if (c.size() == 1) {
      const auto& [m, q] = *c.terms().begin();
      auto g = group_of.find(m);
      if (g == group_of.end()) {
        group_of.emplace(m, items.size());
        Item item;
        item.grouped = true;
        item.zeta = m;
        item.members.push_back({lambda, q});
        items.push_back(std::move(item));
      } else {
        items[g->second].members.push_back({lambda, q});
      }
    } else {
      Item item;
      item.lambda = lambda;
      item.coefficient = c;
      items.push_back(std::move(item));
    }
  }

  std::vector<Term> terms;
  for (const auto& item : items) {
    if (!item.grouped) {
      const std::string mono = render_class_monomial(item.lambda, letter, f);
      bool all_negative = true;
      for (const auto& [m, q] : item.coefficient.terms()) all_negative = all_negative && q < 0;
      const ZetaPoly shown = all_negative ? -item.coefficient : item.coefficient;
      terms.push_back({all_negative, open_paren(f) + zeta_poly_text(shown, f) + close_paren(f) + mono});
      continue;
    }
    const std::string zeta = render_monomial(item.zeta, f);
    if (item.members.size() == 1 || (item.zeta.is_unit() && [&] {
          std::vector<Rational> qs;
          for (const auto& mq : item.members) qs.push_back(mq.second);
          return rational_gcd(qs) == 1;
        }())) {
      for (const auto& [lambda, q] : item.members) {
        const std::string mono = zeta + render_class_monomial(lambda, letter, f);
        terms.push_back({q < 0, rational_prefix(abs(q), f, !mono.empty()) + mono});
      }
      continue;
    }
    std::vector<Rational> qs;
    for (const auto& mq : item.members) qs.push_back(mq.second);
    Rational factor = rational_gcd(qs);
    if (item.members.front().second < 0) factor = -factor;
    std::vector<Term> inner;
    for (const auto& [lambda, q] : item.members) {
      const Rational k = q / factor;
      const std::string mono = render_class_monomial(lambda, letter, f);
      inner.push_back({k < 0, rational_prefix(abs(k), f, !mono.empty()) + mono});
    }
    terms.push_back({factor < 0, rational_prefix(abs(factor), f, true) + zeta + open_paren(f) +
                                     join_terms(inner, f) + close_paren(f)});
  }
  return join_terms(terms, f);
}

ojson zeta_poly_json(const ZetaPoly& p) {
  ojson terms = ojson::array();
  for (const auto& [m, c] : ordered_terms(p)) {
    ojson mono = ojson::object();
    for (const auto& [g, e] : m.factors()) {
      switch (g.kind()) {
        case Generator::Kind::euler_gamma: mono["gamma"] = e; break;
        case Generator::Kind::pi_squared: mono["pi^2"] = e; break;
        case Generator::Kind::zeta: mono["zeta(" + std::to_string(g.index()) + ")"] = e; break;
      }
    }
    terms.push_back({{"coefficient", c.get_str()}, {"monomial", mono}});
  }
  return terms;
}

Generator generator_from_name(const std::string& name) {
  if (name == "gamma") return Generator::gamma();
  if (name == "pi^2") return Generator::pi2();
  if (name.size() > 6 && name.rfind("zeta(", 0) == 0 && name.back() == ')') {
    const std::string digits = name.substr(5, name.size() - 6);
    if (!digits.empty() && digits.size() < 6 && std::all_of(digits.begin(), digits.end(), ::isdigit))
      return Generator::zeta(std::stoi(digits));
  }
  throw Error(Errc::parse_error, "unknown generator '" + name + "'");
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(Errc::parse_error, "malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

ZetaPoly zeta_poly_from_terms(const nlohmann::json& terms) {
  if (!terms.is_array()) throw Error(Errc::parse_error, "field 'terms': expected an array");
  ZetaPoly p;
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("coefficient") || !t["coefficient"].is_string() || !t.contains("monomial") ||
        !t["monomial"].is_object())
      throw Error(Errc::parse_error, "term: expected {\"coefficient\": string, \"monomial\": object}");
    ZetaMonomial m;
    for (const auto& [name, e] : t["monomial"].items()) {
      if (!e.is_number_integer() || e.get<int>() <= 0)
        throw Error(Errc::parse_error, "monomial exponent for '" + name + "' must be a positive integer");
      m = m * ZetaMonomial(generator_from_name(name), e.get<int>());
    }
    p.add_term(m, rational_from_string(t["coefficient"].get<std::string>()));
  }
  return p;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::string exponent_text(int twice, Format f) {
  // exponent twice/2, for use after a base
  if (twice % 2 == 0) {
    const int e = twice / 2;
    if (e == 1) return "";
    return f == Format::latex ? "^{" + std::to_string(e) + "}" : superscript(e);
  }
  const std::string sign = twice < 0 ? (f == Format::latex ? "-" : std::string(kMinus)) : "";
  return "^{" + sign + std::to_string(twice < 0 ? -twice : twice) + "/2}";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string unicode_minus(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '-') {
      out += kMinus;
    } else {
      out += ch;
    }
  }
  return out;
}

ZetaPoly display_form(const ZetaPoly& p, bool reduced) {
  return reduced ? display_even_zeta(reduce_even_zeta(p)) : p;
}

std::string render_zeta_poly(const ZetaPoly& p, Format format) {
  if (format == Format::json) return zeta_poly_json(p).dump();
  return zeta_poly_text(p, format);
}

std::string render_chern_polynomial(const ChernPolynomial& poly, Format format) {
  if (format == Format::json) {
    ojson arr = ojson::array();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
      arr.push_back({{"partition", it->first.to_string()}, {"terms", zeta_poly_json(it->second)}});
    return arr.dump();
  }
  return class_polynomial_text(poly, 'c', format);
}

std::string render_value(const ZetaPoly& p, Format format, bool reduced) {
  const ZetaPoly shown = display_form(p, reduced);
  if (format != Format::json) return zeta_poly_text(shown, format);
  ojson doc;
  doc["text"] = zeta_poly_text(shown, Format::plain);
  doc["reduced"] = reduced;
  doc["terms"] = zeta_poly_json(shown);
  return doc.dump();
}

ZetaPoly zeta_poly_from_json(std::string_view text) {
  const auto doc = parse_json(text);
  if (doc.is_array()) return zeta_poly_from_terms(doc);
  if (!doc.is_object() || !doc.contains("terms")) throw Error(Errc::parse_error, "value JSON: missing 'terms'");
  return zeta_poly_from_terms(doc["terms"]);
}

std::string render_sequence(const MultiplicativeSequence& seq, Format format, bool reduced) {
  auto shown_degree = [&](int n) {
    ChernPolynomial poly;
    for (const auto& [lambda, c] : seq.degree(n)) {
      ZetaPoly d = display_form(c, reduced);
      if (!d.is_zero()) poly.emplace(lambda, std::move(d));
    }
    return poly;
  };
  if (format == Format::json) {
    ojson doc;
    doc["genus"] = seq.name();
    doc["max_degree"] = seq.max_degree();
    doc["reduced"] = reduced;
    ojson degrees = ojson::array();
    for (int n = 1; n <= seq.max_degree(); ++n) {
      const ChernPolynomial poly = shown_degree(n);
      ojson coeffs = ojson::array();
      for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        coeffs.push_back({{"partition", it->first.to_string()}, {"terms", zeta_poly_json(it->second)}});
      degrees.push_back({{"degree", n}, {"text", class_polynomial_text(poly, 'c', Format::plain)},
                         {"coefficients", coeffs}});
    }
    doc["degrees"] = degrees;
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (int n = 1; n <= seq.max_degree(); ++n) {
    const std::string body = class_polynomial_text(shown_degree(n), 'c', format);
    if (format == Format::latex) {
      out += "K_{" + std::to_string(n) + "} &= " + body + " \\\\\n";
    } else {
      out += std::to_string(n) + "\t" + body + "\n";
    }
  }
  return out;
}

MultiplicativeSequence sequence_from_json(std::string_view text) {
  const auto doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("max_degree") || !doc["max_degree"].is_number_integer() ||
      !doc.contains("degrees") || !doc["degrees"].is_array())
    throw Error(Errc::parse_error, "sequence JSON: expected 'max_degree' and 'degrees'");
  const int n_max = doc["max_degree"].get<int>();
  if (n_max < 0 || n_max > kMaxSequenceDegree) throw Error(Errc::guard_exceeded, "sequence JSON: bad max_degree");
  std::vector<ChernPolynomial> polys(n_max + 1);
  polys[0][Partition()] = ZetaPoly(1L);
  for (const auto& d : doc["degrees"]) {
    if (!d.contains("degree") || !d["degree"].is_number_integer() || !d.contains("coefficients"))
      throw Error(Errc::parse_error, "sequence JSON: degree entry needs 'degree' and 'coefficients'");
    const int n = d["degree"].get<int>();
    if (n < 1 || n > n_max) throw Error(Errc::parse_error, "sequence JSON: degree out of range");
    for (const auto& c : d["coefficients"]) {
      if (!c.contains("partition") || !c["partition"].is_string() || !c.contains("terms"))
        throw Error(Errc::parse_error, "sequence JSON: coefficient needs 'partition' and 'terms'");
      Partition lambda = Partition::parse(c["partition"].get<std::string>());
      if (lambda.weight() != n) throw Error(Errc::parse_error, "sequence JSON: partition weight mismatch");
      polys[n][lambda] = zeta_poly_from_terms(c["terms"]);
    }
  }
  std::string name = doc.contains("genus") && doc["genus"].is_string() ? doc["genus"].get<std::string>() : "";
  return MultiplicativeSequence(name, std::move(polys));
}

std::string render_series(const PowerSeries& s, Format format) {
  if (format == Format::json) {
    ojson doc;
    doc["order"] = s.order();
    ojson coeffs = ojson::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(zeta_poly_json(c));
    doc["coefficients"] = coeffs;
    return doc.dump();
  }
  std::vector<Term> terms;
  for (int i = 0; i <= s.order(); ++i) {
    std::string power;
    if (i >= 1) {
      if (format == Format::latex) {
        power = i == 1 ? " z" : " z^{" + std::to_string(i) + "}";
      } else {
        power = i == 1 ? "·z" : "·z" + superscript(i);
      }
    }
    const ZetaPoly& c = s[i];
    if (c.is_constant()) {
      const Rational q = c.constant_term();
      const Rational a = abs(q);
      std::string num;
      if (format == Format::latex && a.get_den() != 1) {
        num = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
      } else {
        num = a.get_str();
      }
      terms.push_back({q < 0, num + power});
    } else {
      terms.push_back({false, open_paren(format) + zeta_poly_text(c, format) + close_paren(format) + power});
    }
  }
  return join_terms(terms, format);
}

std::string render_radical(const RadicalScalar& x, Format format) {
  const bool latex = format == Format::latex;
  std::vector<std::string> pieces;
  const int t = x.twopi_half_exponent();
  const int h = x.u_half_exponent();
  if (x.radicand() != 1)
    pieces.push_back(latex ? "\\sqrt{" + x.radicand().get_str() + "}" : "√" + x.radicand().get_str());
  if (t == 1) {
    pieces.push_back(latex ? "\\sqrt{2\\pi}" : "√(2π)");
  } else if (t == 2) {
    pieces.push_back(latex ? "2\\pi" : "2π");
  } else if (t != 0) {
    pieces.push_back((latex ? "(2\\pi)" : "(2π)") + exponent_text(t, format));
  }
  if (h == 1) {
    pieces.push_back(latex ? "\\sqrt{u}" : "√u");
  } else if (h != 0) {
    pieces.push_back("u" + exponent_text(h, format));
  }
  const Rational a = abs(x.coefficient());
  std::string prefix;
  if (a != 1 || pieces.empty()) prefix = rational_prefix(a, format, false);
  std::string body = prefix;
  for (const auto& p : pieces) body += (body.empty() ? "" : (latex ? " \\cdot " : "·")) + p;
  if (x.coefficient() < 0) body = minus_sign(format) + body;
  if (format == Format::json) {
    ojson doc;
    doc["text"] = render_radical(x, Format::plain);
    doc["coefficient"] = x.coefficient().get_str();
    doc["radicand"] = x.radicand().get_str();
    doc["twopi_half_exponent"] = t;
    doc["u_half_exponent"] = h;
    return doc.dump();
  }
  return body;
}

std::string render_pontryagin(const PontryaginExpr& expr, Format format) {
  if (format == Format::json) {
    ojson arr = ojson::array();
    for (auto it = expr.coords.rbegin(); it != expr.coords.rend(); ++it)
      arr.push_back({{"partition", it->first.to_string()}, {"terms", zeta_poly_json(it->second)}});
    ojson doc;
    doc["weight"] = expr.weight;
    doc["pontryagin"] = arr;
    return doc.dump();
  }
  return class_polynomial_text(expr.coords, 'p', format);
}

std::string render_euler_class(const RegEulerClass& e, Format format) {
  if (format == Format::json) {
    ojson doc;
    doc["rank"] = e.rank;
    doc["real"] = e.real;
    doc["prefactor"] = ojson::parse(render_radical(e.prefactor, Format::json));
    ojson terms = ojson::array();
    for (const auto& t : e.terms)
      terms.push_back({{"degree", t.degree},
                       {"twopi_exponent", t.twopi_exponent},
                       {"u_exponent", t.u_exponent},
                       {"polynomial", ojson::parse(render_chern_polynomial(t.poly, Format::json))}});
    doc["terms"] = terms;
    return doc.dump(2) + "\n";
  }
  std::string out = "prefactor\t" + render_radical(e.prefactor, format) + "\n";
  for (const auto& t : e.terms) {
    const std::string poly = class_polynomial_text(t.poly, 'c', format);
    std::string line;
    if (t.poly.empty()) {
      line = "0";
    } else if (t.degree == 0) {
      line = poly;
    } else {
      const RadicalScalar scale(1, 1, 2 * t.twopi_exponent, 2 * t.u_exponent);
      line = render_radical(scale, format) + (format == Format::latex ? " \\cdot " : "·") + open_paren(format) +
             poly + close_paren(format);
    }
    out += std::to_string(t.degree) + "\t" + line + "\n";
  }
  return out;
}

}  // namespace gammahat
