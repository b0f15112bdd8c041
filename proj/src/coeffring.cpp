#include "gammahat/coeffring.hpp"

#include <algorithm>
#include <mutex>

#include "gammahat/error.hpp"

namespace gammahat {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "bernoulli index must be non-negative");
  std::lock_guard lock(bernoulli_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  while (static_cast<int>(bernoulli_table.size()) <= n) {
    const int m = static_cast<int>(bernoulli_table.size());
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += binom * bernoulli_table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    bernoulli_table.push_back(b);
  }
  return bernoulli_table[n];
}

Rational even_zeta_ratio(int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "even_zeta_ratio requires k >= 1");
  // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
  Integer fact = 1;
  for (int i = 2; i <= 2 * k; ++i) fact *= i;
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
  Rational r = bernoulli(2 * k) * Rational(two_pow) / Rational(2 * fact);
  if (k % 2 == 0) r = -r;
  r.canonicalize();
  return r;
}

Generator Generator::zeta(int k) {
  if (k < 2) throw Error(Errc::invalid_argument, "zeta(k) requires k >= 2, got " + std::to_string(k));
  return Generator(Kind::zeta, k);
}

int Generator::weight() const {
  switch (kind_) {
    case Kind::euler_gamma: return 1;
    case Kind::pi_squared: return 2;
    case Kind::zeta: return index_;
  }
  return 0;
}

ZetaMonomial::ZetaMonomial(Generator g, int exponent) { multiply_in(g, exponent); }

ZetaMonomial::ZetaMonomial(std::initializer_list<Factor> factors) {
  for (const auto& [g, e] : factors) multiply_in(g, e);
}

void ZetaMonomial::multiply_in(const Generator& g, int exponent) {
  if (exponent < 0) throw Error(Errc::invalid_argument, "negative exponent in zeta monomial");
  if (exponent == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                             [](const Factor& f, const Generator& x) { return f.first < x; });
  if (it != factors_.end() && it->first == g) {
    it->second += exponent;
  } else {
    factors_.insert(it, {g, exponent});
  }
}

int ZetaMonomial::exponent(const Generator& g) const {
  for (const auto& [h, e] : factors_)
    if (h == g) return e;
  return 0;
}

int ZetaMonomial::weight() const {
  int w = 0;
  for (const auto& [g, e] : factors_) w += g.weight() * e;
  return w;
}

ZetaMonomial ZetaMonomial::operator*(const ZetaMonomial& other) const {
  ZetaMonomial out = *this;
  for (const auto& [g, e] : other.factors_) out.multiply_in(g, e);
  return out;
}

ZetaPoly::ZetaPoly(long c) : ZetaPoly(Rational(c)) {}

ZetaPoly::ZetaPoly(const Rational& c) {
  if (c != 0) terms_.emplace(ZetaMonomial(), c);
}

ZetaPoly::ZetaPoly(const ZetaMonomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool ZetaPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational ZetaPoly::constant_term() const { return coefficient(ZetaMonomial()); }

Rational ZetaPoly::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaPoly::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ZetaPoly& ZetaPoly::operator*=(const ZetaPoly& o) { return *this = *this * o; }

ZetaPoly& ZetaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

ZetaPoly ZetaPoly::operator-() const {
  ZetaPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ZetaPoly ZetaPoly::pow(unsigned k) const {
  ZetaPoly result(1L);
  ZetaPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

ZetaPoly reduce_even_zeta(const ZetaPoly& p) {
  ZetaPoly out;
  for (const auto& [m, c] : p.terms()) {
    ZetaMonomial kept;
    Rational coeff = c;
    int pi2_power = 0;
    for (const auto& [g, e] : m.factors()) {
      if (g.kind() == Generator::Kind::zeta && g.index() % 2 == 0) {
        const int k = g.index() / 2;
        Rational r = even_zeta_ratio(k);
        for (int i = 0; i < e; ++i) coeff *= r;
        pi2_power += k * e;
      } else {
        kept = kept * ZetaMonomial(g, e);
      }
    }
    if (pi2_power > 0) kept = kept * ZetaMonomial(Generator::pi2(), pi2_power);
    out.add_term(kept, coeff);
  }
  return out;
}

ZetaPoly display_even_zeta(const ZetaPoly& p) {
  ZetaPoly out;
  for (const auto& [m, c] : p.terms()) {
    const int k = m.exponent(Generator::pi2());
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    ZetaMonomial rest;
    for (const auto& [g, e] : m.factors())
      if (g.kind() != Generator::Kind::pi_squared) rest = rest * ZetaMonomial(g, e);
    out.add_term(rest * ZetaMonomial(Generator::zeta(2 * k)), c / even_zeta_ratio(k));
  }
  return out;
}

bool equal_reduced(const ZetaPoly& a, const ZetaPoly& b) {
  return reduce_even_zeta(a) == reduce_even_zeta(b);
}

}  // namespace gammahat
