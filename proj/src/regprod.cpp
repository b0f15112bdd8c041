#include "gammahat/regprod.hpp"

#include <cctype>

#include "gammahat/error.hpp"

namespace gammahat {

namespace {

// Splits n = s^2 * f with f square-free; returns {s, f}. Trial division to
// 10^6, then a perfect-square test on the cofactor.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer outside = 1;
  Integer inside = 1;
  for (unsigned long p = 2; p <= 1000000 && p * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2) inside *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      outside *= r;
    } else {
      inside *= n;
    }
  }
  return {outside, inside};
}

}  // namespace

RadicalScalar::RadicalScalar(const Rational& coefficient, const Integer& radicand, int twopi_half, int u_half)
    : coefficient_(coefficient), radicand_(radicand), twopi_half_(twopi_half), u_half_(u_half) {
  if (radicand_ <= 0) throw Error(Errc::invalid_argument, "radicand must be positive");
  normalize();
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& q) {
  if (q < 0) throw Error(Errc::not_representable, "square root of a negative rational");
  if (q == 0) return RadicalScalar();
  // sqrt(p/q) = sqrt(p q) / q
  return RadicalScalar(Rational(1) / Rational(q.get_den()), q.get_num() * q.get_den());
}

void RadicalScalar::normalize() {
  coefficient_.canonicalize();
  if (coefficient_ == 0) {
    radicand_ = 1;
    twopi_half_ = 0;
    u_half_ = 0;
    return;
  }
  auto [outside, inside] = split_square(radicand_);
  coefficient_ *= outside;
  radicand_ = inside;
}

RadicalScalar scalar_mul(const RadicalScalar& a, const RadicalScalar& b) {
  return RadicalScalar(a.coefficient() * b.coefficient(), a.radicand() * b.radicand(),
                       a.twopi_half_exponent() + b.twopi_half_exponent(),
                       a.u_half_exponent() + b.u_half_exponent());
}

RadicalScalar scalar_inverse(const RadicalScalar& a) {
  if (a.is_zero()) throw Error(Errc::zero_scale, "cannot invert zero");
  // 1 / (c sqrt r) = sqrt r / (c r)
  return RadicalScalar(Rational(1) / (a.coefficient() * Rational(a.radicand())), a.radicand(),
                       -a.twopi_half_exponent(), -a.u_half_exponent());
}

RadicalScalar scalar_pow(const RadicalScalar& a, int k) {
  RadicalScalar base = k < 0 ? scalar_inverse(a) : a;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  RadicalScalar result(1);
  while (e) {
    if (e & 1u) result = scalar_mul(result, base);
    e >>= 1u;
    if (e) base = scalar_mul(base, base);
  }
  return result;
}

RadicalScalar scalar_inverse_sqrt(const RadicalScalar& a) {
  if (a.is_zero()) throw Error(Errc::zero_scale, "zero scale");
  if (a.coefficient() < 0 || a.radicand() != 1 || a.twopi_half_exponent() % 2 != 0 || a.u_half_exponent() % 2 != 0)
    throw Error(Errc::not_representable, "scale^(-1/2) is not a radical scalar for this scale");
  RadicalScalar root = RadicalScalar::sqrt_of(a.coefficient());
  root = RadicalScalar(root.coefficient(), root.radicand(), a.twopi_half_exponent() / 2, a.u_half_exponent() / 2);
  return scalar_inverse(root);
}

RadicalScalar zeta_reg_product_linear(const RadicalScalar& scale) {
  return scalar_mul(scalar_inverse_sqrt(scale), RadicalScalar::sqrt_two_pi());
}

namespace {

// expr   := factor (('*' | '/') factor)*
// factor := atom ('^' exponent)?
// exponent := '-'? int | '(' '-'? int ('/' int)? ')'
// atom   := number | '2pi' | 'u' | '(' expr ')'
class ScaleParser {
 public:
  explicit ScaleParser(std::string_view text) : text_(text) {}

  RadicalScalar parse() {
    RadicalScalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error,
                "scale expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Integer digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RadicalScalar expr() {
    RadicalScalar v = factor();
    for (;;) {
      if (accept("*") || accept("·")) {
        v = scalar_mul(v, factor());
      } else if (accept("/")) {
        RadicalScalar d = factor();
        if (d.is_zero()) throw Error(Errc::zero_scale, "division by zero in scale expression");
        v = scalar_mul(v, scalar_inverse(d));
      } else {
        return v;
      }
    }
  }

  // Returns twice the exponent.
  int exponent() {
    bool paren = accept("(");
    bool negative = accept("-");
    Integer num = digits();
    Integer den = 1;
    // A bare exponent is an integer; "u^2/(2pi)" divides by 2pi.
    if (paren && accept("/")) den = digits();
    if (paren && !accept(")")) fail("expected ')'");
    if (den != 1 && den != 2) fail("exponents must be integers or halves");
    if (num > 1000) fail("exponent too large");
    int twice = static_cast<int>(num.get_si()) * (den == 1 ? 2 : 1);
    return negative ? -twice : twice;
  }

  RadicalScalar factor() {
    RadicalScalar base = atom();
    if (!accept("^")) return base;
    const int twice = exponent();
    RadicalScalar whole = scalar_pow(base, twice / 2);
    if (twice % 2 == 0) return whole;
    // odd multiple of 1/2: multiply by base^(+-1/2)
    RadicalScalar half = scalar_inverse(scalar_inverse_sqrt(base));
    return scalar_mul(whole, twice > 0 ? half : scalar_inverse(half));
  }

  RadicalScalar atom() {
    if (accept("(")) {
      RadicalScalar v = expr();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (accept("2pi") || accept("2π")) return RadicalScalar::two_pi();
    if (accept("u")) return RadicalScalar::u();
    return RadicalScalar(Rational(digits()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_rank(int rank, int n_max) {
  if (rank < 2) throw Error(Errc::invalid_argument, "rank must be at least 2, got " + std::to_string(rank));
  if (n_max < 0 || n_max > kMaxSequenceDegree)
    throw Error(Errc::guard_exceeded, "degree " + std::to_string(n_max) + " outside [0, " +
                                          std::to_string(kMaxSequenceDegree) + "]");
}

RadicalScalar euler_prefactor(int rank) {
  // zeta-regularized prod_n (n u / 2 pi), raised to the rank
  const RadicalScalar scale = scalar_mul(RadicalScalar::u(), scalar_inverse(RadicalScalar::two_pi()));
  return scalar_pow(zeta_reg_product_linear(scale), rank);
}

}  // namespace

RadicalScalar parse_scale_expression(std::string_view text) { return ScaleParser(text).parse(); }

RegEulerClass reg_equivariant_euler(int rank, int n_max) {
  check_rank(rank, n_max);
  RegEulerClass out;
  out.rank = rank;
  out.prefactor = euler_prefactor(rank);
  const auto seq = builtin_sequence(GenusKind::gamma_hat, n_max);
  // x -> (2 pi / u) x scales a degree-n class by (2 pi / u)^n.
  for (int n = 0; n <= n_max; ++n) out.terms.push_back({n, seq.degree(n), n, -n});
  return out;
}

RegEulerClass reg_equivariant_euler_real(int rank, int n_max) {
  check_rank(rank, n_max);
  RegEulerClass out;
  out.rank = rank;
  out.real = true;
  out.prefactor = euler_prefactor(rank);
  // 1/A-hat(w) = sinh(w/2)/(w/2); w = 4 pi^2 x / u gives (2 pi)^(2n) u^(-n).
  const auto seq = sequence_from_series(series_inv(series_a_hat(n_max)), n_max, "a-hat inverse");
  for (int n = 0; n <= n_max; ++n) out.terms.push_back({n, seq.degree(n), 2 * n, -n});
  return out;
}

}  // namespace gammahat
