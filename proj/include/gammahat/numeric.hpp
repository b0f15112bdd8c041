#pragma once

// High-precision evaluation of the coefficient-ring generators.

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>

#include "gammahat/coeffring.hpp"

namespace gammahat {

/// Fixed working precision in decimal digits. Requested precisions are
/// capped below this so every result carries guard digits.
inline constexpr unsigned kWorkingDigits = 120;
inline constexpr unsigned kMaxRequestDigits = 100;
inline constexpr unsigned kMinRequestDigits = 15;
inline constexpr unsigned kDefaultDigits = 30;

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
                                           boost::multiprecision::et_off>;

/// zeta(k) for integer k >= 2 by Euler-Maclaurin summation. The tail is
/// bounded by the first omitted correction term, and the loop stops once
/// that bound is below 10^-(digits+5).
Real zeta_numeric(int k, unsigned digits = kDefaultDigits);

/// Euler's constant from H_N - log N with Euler-Maclaurin corrections.
Real gamma_numeric(unsigned digits = kDefaultDigits);

Real pi_numeric();

/// Converts an exact rational to the working precision.
Real to_real(const Rational& q);

class NumericContext {
 public:
  explicit NumericContext(unsigned digits = kDefaultDigits);

  unsigned digits() const { return digits_; }

  /// Cached generator value. Safe to call from several threads.
  Real value(const Generator& g) const;

  Real eval(const ZetaPoly& p) const;

 private:
  unsigned digits_;
  mutable std::mutex mutex_;
  mutable std::map<Generator, Real> cache_;
};

/// Convenience wrapper: evaluate with a context of the given precision.
Real numeric_eval(const ZetaPoly& p, const NumericContext& ctx);

/// Fixed-point decimal rendering with the given number of digits after the
/// point, using a plain ASCII minus sign.
std::string to_fixed(const Real& x, int decimals);

}  // namespace gammahat
