#pragma once

// Truncated one-variable power series over ZetaPoly and the named
// generating functions of the genera.

#include <vector>

#include "gammahat/coeffring.hpp"
#include "gammahat/numeric.hpp"

namespace gammahat {

class PowerSeries {
 public:
  /// The zero series truncated at `order` (inclusive).
  explicit PowerSeries(int order = 0);
  explicit PowerSeries(std::vector<ZetaPoly> coefficients);

  static PowerSeries one(int order);
  /// a + b z, truncated at `order`.
  static PowerSeries linear(int order, const ZetaPoly& a, const ZetaPoly& b);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ZetaPoly& operator[](int i) const { return coeffs_.at(i); }
  ZetaPoly& operator[](int i) { return coeffs_.at(i); }
  const std::vector<ZetaPoly>& coefficients() const { return coeffs_; }

  PowerSeries truncated(int order) const;
  /// f(c z) for a rational scale c.
  PowerSeries scaled_argument(const Rational& c) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<ZetaPoly> coeffs_;
};

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_scale(const PowerSeries& f, const ZetaPoly& c);

/// Multiplicative inverse. Requires constant term exactly 1.
PowerSeries series_inv(const PowerSeries& f);
/// Requires constant term 0.
PowerSeries series_exp(const PowerSeries& f);
/// Requires constant term 1.
PowerSeries series_log(const PowerSeries& f);
/// f(g(z)); requires g to have constant term 0. Result order is the
/// minimum of the two orders.
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);

/// 1/Gamma-hat(z) = exp(sum_{k>=2} (-1)^(k+1) zeta(k) z^k / k).
PowerSeries series_gamma_hat_recip(int order);
/// 1/Gamma(1+z) = exp(gamma z) / Gamma-hat(z).
PowerSeries series_gamma_recip(int order);
/// (z/2) / sinh(z/2)
PowerSeries series_a_hat(int order);
/// z / (1 - e^-z)
PowerSeries series_todd(int order);
/// z / tanh(z)
PowerSeries series_l(int order);

/// prod_{n=1}^{k} (1 + z/n) e^(-z/n), exact.
PowerSeries psi_reg_partial_product(long k, int order);

/// Same product evaluated in floating point via its logarithm
///   sum_{j>=2} (-1)^(j+1) H_k^(j) z^j / j,
/// for partial products too long to carry exactly.
std::vector<Real> psi_reg_partial_product_numeric(long k, int order);

}  // namespace gammahat
