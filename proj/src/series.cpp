#include "gammahat/series.hpp"

#include <algorithm>

#include "gammahat/error.hpp"

namespace gammahat {

namespace {

void check_order(int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "series order must be non-negative");
}

// sinh(z/2)/(z/2) = sum_k z^(2k) / (4^k (2k+1)!)
PowerSeries sinh_half_ratio(int order) {
  PowerSeries s(order);
  Integer fact = 1;  // (2k+1)!
  Integer four = 1;  // 4^k
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) {
      fact *= (2 * k) * (2 * k + 1);
      four *= 4;
    }
    s[2 * k] = make_rational(Integer(1), four * fact);
  }
  return s;
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  check_order(order);
  coeffs_.assign(order + 1, ZetaPoly());
}

PowerSeries::PowerSeries(std::vector<ZetaPoly> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "power series needs at least one coefficient");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s[0] = ZetaPoly(1L);
  return s;
}

PowerSeries PowerSeries::linear(int order, const ZetaPoly& a, const ZetaPoly& b) {
  PowerSeries s(order);
  s[0] = a;
  if (order >= 1) s[1] = b;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  check_order(order);
  PowerSeries s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s[i] = coeffs_[i];
  return s;
}

PowerSeries PowerSeries::scaled_argument(const Rational& c) const {
  PowerSeries s = *this;
  Rational p = 1;
  for (int i = 0; i <= order(); ++i) {
    s[i] *= p;
    p *= c;
  }
  return s;
}

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
  const int n = std::min(f.order(), g.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = f[i] + g[i];
  return s;
}

PowerSeries series_sub(const PowerSeries& f, const PowerSeries& g) {
  const int n = std::min(f.order(), g.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = f[i] - g[i];
  return s;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
  const int n = std::min(f.order(), g.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g[j].is_zero()) continue;
      s[i + j] += f[i] * g[j];
    }
  }
  return s;
}

PowerSeries series_scale(const PowerSeries& f, const ZetaPoly& c) {
  PowerSeries s = f;
  for (int i = 0; i <= s.order(); ++i) s[i] = s[i] * c;
  return s;
}

PowerSeries series_inv(const PowerSeries& f) {
  if (f[0] != ZetaPoly(1L))
    throw Error(Errc::non_unit_constant, "series_inv requires constant term 1");
  const int n = f.order();
  PowerSeries g(n);
  g[0] = ZetaPoly(1L);
  for (int i = 1; i <= n; ++i) {
    ZetaPoly acc;
    for (int j = 1; j <= i; ++j)
      if (!f[j].is_zero()) acc += f[j] * g[i - j];
    g[i] = -acc;
  }
  return g;
}

PowerSeries series_exp(const PowerSeries& f) {
  if (!f[0].is_zero()) throw Error(Errc::nonzero_constant, "series_exp requires constant term 0");
  // g' = f' g  =>  n g_n = sum_{k=1}^n k f_k g_{n-k}
  const int n = f.order();
  PowerSeries g(n);
  g[0] = ZetaPoly(1L);
  for (int i = 1; i <= n; ++i) {
    ZetaPoly acc;
    for (int k = 1; k <= i; ++k)
      if (!f[k].is_zero()) acc += (f[k] * g[i - k]) * Rational(k);
    g[i] = acc * make_rational(1, i);
  }
  return g;
}

PowerSeries series_log(const PowerSeries& g) {
  if (g[0] != ZetaPoly(1L)) throw Error(Errc::non_unit_constant, "series_log requires constant term 1");
  // n f_n = n g_n - sum_{k=1}^{n-1} k f_k g_{n-k}
  const int n = g.order();
  PowerSeries f(n);
  for (int i = 1; i <= n; ++i) {
    ZetaPoly acc = g[i] * Rational(i);
    for (int k = 1; k < i; ++k)
      if (!f[k].is_zero()) acc -= (f[k] * g[i - k]) * Rational(k);
    f[i] = acc * make_rational(1, i);
  }
  return f;
}

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero()) throw Error(Errc::nonzero_constant, "series_compose requires inner constant term 0");
  const int n = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncated(n);
  // Horner: f_0 + g (f_1 + g (f_2 + ...))
  PowerSeries acc(n);
  acc[0] = f[n];
  for (int i = n - 1; i >= 0; --i) {
    acc = series_mul(acc, inner);
    acc[0] += f[i];
  }
  return acc;
}

PowerSeries series_gamma_hat_recip(int order) {
  check_order(order);
  PowerSeries log_series(order);
  for (int k = 2; k <= order; ++k) {
    Rational c = make_rational(k % 2 == 0 ? -1 : 1, k);
    log_series[k] = ZetaPoly::zeta(k) * c;
  }
  return series_exp(log_series);
}

PowerSeries series_gamma_recip(int order) {
  check_order(order);
  PowerSeries linear(order);
  if (order >= 1) linear[1] = ZetaPoly::gamma();
  return series_mul(series_exp(linear), series_gamma_hat_recip(order));
}

PowerSeries series_a_hat(int order) { return series_inv(sinh_half_ratio(order)); }

PowerSeries series_todd(int order) {
  check_order(order);
  // z / (1 - e^-z) = sum_n (-1)^n B_n z^n / n!  (B_1 = -1/2 gives +1/2 z)
  PowerSeries s(order);
  Integer fact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    Rational c = bernoulli(n) / Rational(fact);
    if (n % 2 == 1) c = -c;
    s[n] = c;
  }
  return s;
}

PowerSeries series_l(int order) {
  check_order(order);
  // z / tanh z = (z cosh z) / sinh z; divide two unit-constant series.
  PowerSeries numer(order);
  PowerSeries denom(order);
  Integer fact = 1;
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) fact *= (2 * k - 1) * (2 * k);
    numer[2 * k] = make_rational(Integer(1), fact);                // cosh z
    denom[2 * k] = make_rational(Integer(1), fact * (2 * k + 1));  // sinh(z)/z
  }
  return series_mul(numer, series_inv(denom));
}

PowerSeries psi_reg_partial_product(long k, int order) {
  if (k < 1) throw Error(Errc::invalid_argument, "psi_reg partial product needs k >= 1");
  check_order(order);
  PowerSeries product = PowerSeries::one(order);
  for (long n = 1; n <= k; ++n) {
    const Rational inv_n = make_rational(1, n);
    PowerSeries damping(order);  // e^(-z/n)
    Rational c = 1;
    Integer fact = 1;
    for (int i = 0; i <= order; ++i) {
      if (i > 0) fact *= i;
      damping[i] = Rational(c / Rational(fact));
      c *= -inv_n;
    }
    product = series_mul(product, series_mul(PowerSeries::linear(order, ZetaPoly(1L), inv_n), damping));
  }
  return product;
}

std::vector<Real> psi_reg_partial_product_numeric(long k, int order) {
  if (k < 1) throw Error(Errc::invalid_argument, "psi_reg partial product needs k >= 1");
  check_order(order);
  std::vector<Real> power_sums(order + 1, Real(0));  // H_k^(j)
  for (long n = k; n >= 1; --n) {  // small terms first
    const Real inv = Real(1) / Real(n);
    Real p = inv;
    for (int j = 1; j <= order; ++j) {
      power_sums[j] += p;
      p *= inv;
    }
  }
  std::vector<Real> log_coeffs(order + 1, Real(0));
  for (int j = 2; j <= order; ++j) log_coeffs[j] = (j % 2 == 0 ? -power_sums[j] : power_sums[j]) / j;
  std::vector<Real> out(order + 1, Real(0));
  out[0] = 1;
  for (int i = 1; i <= order; ++i) {
    Real acc = 0;
    for (int j = 1; j <= i; ++j) acc += Real(j) * log_coeffs[j] * out[i - j];
    out[i] = acc / i;
  }
  return out;
}

}  // namespace gammahat
