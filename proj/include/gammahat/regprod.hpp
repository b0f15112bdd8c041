#pragma once

// Zeta-regularized products of linear sequences and the regularized
// S^1-equivariant Euler class in split form.

#include <vector>

#include "gammahat/coeffring.hpp"
#include "gammahat/genus.hpp"

namespace gammahat {

/// coefficient * sqrt(radicand) * (2 pi)^(twopi_half / 2) * u^(u_half / 2).
/// The radicand is kept square-free; zero is {0, 1, 0, 0}.
class RadicalScalar {
 public:
  RadicalScalar() : RadicalScalar(Rational(0)) {}
  RadicalScalar(const Rational& coefficient, const Integer& radicand = 1, int twopi_half = 0, int u_half = 0);

  static RadicalScalar sqrt_two_pi() { return RadicalScalar(1, 1, 1, 0); }
  static RadicalScalar two_pi() { return RadicalScalar(1, 1, 2, 0); }
  static RadicalScalar u() { return RadicalScalar(1, 1, 0, 2); }
  /// sqrt(q) for a non-negative rational q.
  static RadicalScalar sqrt_of(const Rational& q);

  const Rational& coefficient() const { return coefficient_; }
  const Integer& radicand() const { return radicand_; }
  int twopi_half_exponent() const { return twopi_half_; }
  int u_half_exponent() const { return u_half_; }
  bool is_zero() const { return coefficient_ == 0; }

  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    return a.coefficient_ == b.coefficient_ && a.radicand_ == b.radicand_ && a.twopi_half_ == b.twopi_half_ &&
           a.u_half_ == b.u_half_;
  }

 private:
  void normalize();

  Rational coefficient_;
  Integer radicand_;
  int twopi_half_;
  int u_half_;
};

RadicalScalar scalar_mul(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar scalar_inverse(const RadicalScalar& a);
RadicalScalar scalar_pow(const RadicalScalar& a, int k);
/// a^(-1/2). Needs a positive rational part with no radical and even
/// half-exponents, otherwise the result leaves the scalar algebra.
RadicalScalar scalar_inverse_sqrt(const RadicalScalar& a);

/// Regularized product of {scale * n}: scale^zeta(0) * exp(-zeta'(0))
/// = scale^(-1/2) * sqrt(2 pi).
RadicalScalar zeta_reg_product_linear(const RadicalScalar& scale);

/// Parses q * (2pi)^a * u^b style expressions such as "u/(2pi)", "4",
/// "3*u^2/(2pi)^(1/2)". Exponents are integers or halves.
RadicalScalar parse_scale_expression(std::string_view text);

struct GradedTerm {
  int degree = 0;
  /// Chern-class polynomial K_n of the relevant genus.
  ChernPolynomial poly;
  /// The term is (2 pi)^twopi_exponent * u^u_exponent * poly.
  int twopi_exponent = 0;
  int u_exponent = 0;
};

struct RegEulerClass {
  int rank = 0;
  bool real = false;
  RadicalScalar prefactor;
  std::vector<GradedTerm> terms;  // indexed by degree
};

/// (2 pi / sqrt u)^m prod_j 1/Gamma-hat(2 pi x_j / u), graded by degree.
RegEulerClass reg_equivariant_euler(int rank, int n_max);
/// Complexified real bundle: (2 pi / sqrt u)^m prod_j 1/A-hat(4 pi^2 x_j / u).
RegEulerClass reg_equivariant_euler_real(int rank, int n_max);

}  // namespace gammahat
