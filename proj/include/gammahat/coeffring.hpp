#pragma once

// Exact coefficient ring Q[gamma, zeta(2), zeta(3), ...] with an optional
// pi^2 generator used by the even-zeta normal form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gammahat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Bernoulli number B_n with the convention B_1 = -1/2.
Rational bernoulli(int n);

/// The rational r_k with zeta(2k) = r_k * pi^(2k).
Rational even_zeta_ratio(int k);

class Generator {
 public:
  enum class Kind : std::uint8_t { euler_gamma, pi_squared, zeta };

  static Generator gamma() { return Generator(Kind::euler_gamma, 0); }
  static Generator pi2() { return Generator(Kind::pi_squared, 0); }
  static Generator zeta(int k);

  Kind kind() const { return kind_; }
  /// Argument of zeta(k); zero for the other kinds.
  int index() const { return index_; }
  /// Grading used for display and sanity checks: gamma has weight 1,
  /// zeta(k) weight k, pi^2 weight 2.
  int weight() const;

  auto operator<=>(const Generator&) const = default;

 private:
  Generator(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

class ZetaMonomial {
 public:
  using Factor = std::pair<Generator, int>;

  ZetaMonomial() = default;
  explicit ZetaMonomial(Generator g, int exponent = 1);
  ZetaMonomial(std::initializer_list<Factor> factors);

  bool is_unit() const { return factors_.empty(); }
  int exponent(const Generator& g) const;
  int weight() const;
  const std::vector<Factor>& factors() const { return factors_; }

  ZetaMonomial operator*(const ZetaMonomial& other) const;

  auto operator<=>(const ZetaMonomial&) const = default;

 private:
  void multiply_in(const Generator& g, int exponent);
  // Sorted by generator, exponents strictly positive.
  std::vector<Factor> factors_;
};

class ZetaPoly {
 public:
  using TermMap = std::map<ZetaMonomial, Rational>;

  ZetaPoly() = default;
  ZetaPoly(long c);  // NOLINT: integers embed implicitly
  ZetaPoly(const Rational& c);  // NOLINT
  ZetaPoly(const ZetaMonomial& m, const Rational& c = 1);

  static ZetaPoly gamma() { return ZetaPoly(ZetaMonomial(Generator::gamma())); }
  static ZetaPoly zeta(int k) { return ZetaPoly(ZetaMonomial(Generator::zeta(k))); }
  static ZetaPoly pi2() { return ZetaPoly(ZetaMonomial(Generator::pi2())); }

  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a rational constant (possibly zero).
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const ZetaMonomial& m) const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const ZetaMonomial& m, const Rational& c);

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  ZetaPoly& operator*=(const ZetaPoly& o);
  ZetaPoly& operator*=(const Rational& c);

  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator*(ZetaPoly a, const Rational& c) { return a *= c; }
  friend ZetaPoly operator*(const Rational& c, ZetaPoly a) { return a *= c; }
  ZetaPoly operator-() const;

  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

  ZetaPoly pow(unsigned k) const;

 private:
  TermMap terms_;
};

/// Replaces every zeta(2k) by r_k * (pi^2)^k. Odd zetas and gamma are left
/// alone. Idempotent.
ZetaPoly reduce_even_zeta(const ZetaPoly& p);

/// Inverse rendering of the reduced form: each (pi^2)^k factor becomes
/// zeta(2k) / r_k. Input is expected in reduced form.
ZetaPoly display_even_zeta(const ZetaPoly& p);

/// Equality after even-zeta reduction of both sides.
bool equal_reduced(const ZetaPoly& a, const ZetaPoly& b);

}  // namespace gammahat
