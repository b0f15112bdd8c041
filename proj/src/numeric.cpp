#include "gammahat/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include "gammahat/error.hpp"

namespace gammahat {

namespace {

void check_digits(unsigned digits) {
  if (digits < kMinRequestDigits || digits > kMaxRequestDigits) {
    throw Error(Errc::precision_unachievable,
                "precision of " + std::to_string(digits) + " digits is outside [" +
                    std::to_string(kMinRequestDigits) + ", " + std::to_string(kMaxRequestDigits) + "]");
  }
}

Real tolerance(unsigned digits) { return boost::multiprecision::pow(Real(10), -static_cast<int>(digits) - 5); }

}  // namespace

Real to_real(const Rational& q) {
  Real num(q.get_num().get_str());
  Real den(q.get_den().get_str());
  return num / den;
}

Real pi_numeric() { return boost::math::constants::pi<Real>(); }

Real zeta_numeric(int k, unsigned digits) {
  if (k < 2) throw Error(Errc::invalid_argument, "zeta_numeric requires k >= 2");
  check_digits(digits);
  const Real eps = tolerance(digits);
  const Real s(k);
  // Larger N makes the asymptotic corrections shrink faster; N ~ digits
  // keeps both the head sum and the correction count small.
  const int n_cut = static_cast<int>(digits) + 10;
  const Real N(n_cut);

  Real sum = 0;
  for (int n = 1; n < n_cut; ++n) sum += 1 / boost::multiprecision::pow(Real(n), k);
  const Real n_pow_s = boost::multiprecision::pow(N, k);
  sum += N / (n_pow_s * (s - 1));
  sum += 1 / (2 * n_pow_s);

  // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
  Real rising = s;       // s (s+1) ... (s+2j-2)
  Real factorial = 2;    // (2j)!
  Real n_power = n_pow_s * N;  // N^(s+2j-1)
  const int max_terms = 4 * static_cast<int>(digits) + 40;
  for (int j = 1; j <= max_terms; ++j) {
    const Real term = to_real(bernoulli(2 * j)) * rising / (factorial * n_power);
    if (boost::multiprecision::abs(term) < eps) return sum;
    sum += term;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    factorial *= Real(2 * j + 1) * Real(2 * j + 2);
    n_power *= N * N;
  }
  throw Error(Errc::precision_unachievable, "zeta(" + std::to_string(k) + ") tail bound not reached");
}

Real gamma_numeric(unsigned digits) {
  check_digits(digits);
  const Real eps = tolerance(digits);
  const int n_cut = static_cast<int>(digits) + 10;
  const Real N(n_cut);

  Real harmonic = 0;
  for (int n = 1; n <= n_cut; ++n) harmonic += Real(1) / n;
  Real sum = harmonic - boost::multiprecision::log(N) - 1 / (2 * N);

  // + sum_k B_2k / (2k N^2k); remainder bounded by the next term.
  Real n_power = N * N;
  const int max_terms = 4 * static_cast<int>(digits) + 40;
  for (int k = 1; k <= max_terms; ++k) {
    const Real term = to_real(bernoulli(2 * k)) / (Real(2 * k) * n_power);
    if (boost::multiprecision::abs(term) < eps) return sum;
    sum += term;
    n_power *= N * N;
  }
  throw Error(Errc::precision_unachievable, "Euler constant tail bound not reached");
}

NumericContext::NumericContext(unsigned digits) : digits_(digits) { check_digits(digits); }

Real NumericContext::value(const Generator& g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  Real v;
  switch (g.kind()) {
    case Generator::Kind::euler_gamma: v = gamma_numeric(digits_); break;
    case Generator::Kind::pi_squared: {
      const Real pi = pi_numeric();
      v = pi * pi;
      break;
    }
    case Generator::Kind::zeta: v = zeta_numeric(g.index(), digits_); break;
  }
  std::lock_guard lock(mutex_);
  // Deterministic computation, so a concurrent insert stores the same value.
  return cache_.try_emplace(g, v).first->second;
}

Real NumericContext::eval(const ZetaPoly& p) const {
  Real total = 0;
  for (const auto& [m, c] : p.terms()) {
    Real term = to_real(c);
    for (const auto& [g, e] : m.factors()) term *= boost::multiprecision::pow(value(g), e);
    total += term;
  }
  return total;
}

Real numeric_eval(const ZetaPoly& p, const NumericContext& ctx) { return ctx.eval(p); }

std::string to_fixed(const Real& x, int decimals) {
  return x.str(decimals, std::ios_base::fixed);
}

}  // namespace gammahat
