#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "gammahat/error.hpp"
#include "gammahat/series.hpp"
#include "gammahat/symfun.hpp"

using namespace gammahat;

namespace {

// Explicit polynomials in a fixed number of variables, used as an oracle
// for the transition matrices.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly poly_one(int vars) { return Poly{{Exponents(vars, 0), Rational(1)}}; }

Poly elementary(int k, int vars) {
  Poly out;
  std::vector<bool> pick(vars, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponents e(vars);
    for (int i = 0; i < vars; ++i) e[i] = pick[i] ? 1 : 0;
    out[e] = 1;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Poly power_sum(int k, int vars) {
  Poly out;
  for (int i = 0; i < vars; ++i) {
    Exponents e(vars, 0);
    e[i] = k;
    out[e] = 1;
  }
  return out;
}

Poly product_of(const Partition& lambda, int vars, const std::function<Poly(int, int)>& f) {
  Poly out = poly_one(vars);
  for (int part : lambda.parts()) out = poly_mul(out, f(part, vars));
  return out;
}

// Coefficient of m_mu in a symmetric polynomial: the coefficient of x^mu.
Rational m_coordinate(const Poly& p, const Partition& mu, int vars) {
  Exponents e(vars, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu[i];
  auto it = p.find(e);
  return it == p.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("transition matrices agree with explicit polynomials") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto tables = TransitionCache::shared().tables(n);
    const auto& index = tables->index;
    for (std::size_t r = 0; r < index.size(); ++r) {
      const Poly e = product_of(index[r], n, elementary);
      const Poly p = product_of(index[r], n, power_sum);
      for (std::size_t c = 0; c < index.size(); ++c) {
        CHECK(tables->e_in_m[r][c] == m_coordinate(e, index[c], n));
        CHECK(tables->p_in_m[r][c] == m_coordinate(p, index[c], n));
      }
    }
  }
}

TEST_CASE("transition matrices are mutually inverse and consistent") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    const auto t = TransitionCache::shared().tables(n);
    const auto id = linalg::identity(t->index.size());
    CHECK(linalg::multiply(t->e_in_m, t->m_in_e) == id);
    CHECK(linalg::multiply(t->p_in_m, t->m_in_p) == id);
    CHECK(linalg::multiply(t->e_in_p, t->p_in_e) == id);
    // e -> p -> m must equal e -> m.
    CHECK(linalg::multiply(t->e_in_p, t->p_in_m) == t->e_in_m);
  }
}

TEST_CASE("conversion round trips") {
  for (const auto& lambda : partitions_of(6)) {
    for (Basis b : {Basis::monomial, Basis::elementary, Basis::power_sum}) {
      const auto v = SymFunVector::basis_element(b, lambda);
      for (Basis t : {Basis::monomial, Basis::elementary, Basis::power_sum}) {
        CHECK(convert(convert(v, t), b) == v);
      }
    }
  }
}

TEST_CASE("Newton identities in low weight") {
  // e_2 = (p_1^2 - p_2) / 2
  const auto e2 = convert(SymFunVector::basis_element(Basis::elementary, Partition{2}), Basis::power_sum);
  CHECK(e2.coord(Partition{1, 1}) == make_rational(1, 2));
  CHECK(e2.coord(Partition{2}) == make_rational(-1, 2));
  // e_3 = p_1^3/6 - p_2 p_1/2 + p_3/3
  const auto e3 = convert(SymFunVector::basis_element(Basis::elementary, Partition{3}), Basis::power_sum);
  CHECK(e3.coord(Partition{1, 1, 1}) == make_rational(1, 6));
  CHECK(e3.coord(Partition{2, 1}) == make_rational(-1, 2));
  CHECK(e3.coord(Partition{3}) == make_rational(1, 3));
}

TEST_CASE("Hoffman maps on small monomials") {
  const auto m = [](Partition p) { return SymFunVector::basis_element(Basis::monomial, p); };
  CHECK(hoffman_Z(m({1})) == ZetaPoly::gamma());
  CHECK(hoffman_Zhat(m({1})).is_zero());
  CHECK(hoffman_Zhat(m({2})) == ZetaPoly::zeta(2));
  // m_{1,1} = e_2
  CHECK(hoffman_Zhat(m({1, 1})) == make_rational(-1, 2) * ZetaPoly::zeta(2));
  CHECK(hoffman_Z(m({1, 1})) == make_rational(1, 2) * ZetaPoly::gamma().pow(2) - make_rational(1, 2) * ZetaPoly::zeta(2));
  // m_{2,1} = p_2 p_1 - p_3
  CHECK(hoffman_Z(m({2, 1})) == ZetaPoly::zeta(2) * ZetaPoly::gamma() - ZetaPoly::zeta(3));
}

TEST_CASE("Hoffman maps send E(t) to the reciprocal gamma functions") {
  const PowerSeries gh = series_gamma_hat_recip(8), g = series_gamma_recip(8);
  for (int n = 1; n <= 8; ++n) {
    const auto e = SymFunVector::basis_element(Basis::elementary, Partition{n});
    CHECK(hoffman_Zhat(e) == gh[n]);
    CHECK(hoffman_Z(e) == g[n]);
  }
}

TEST_CASE("vector validation") {
  SymFunVector v(Basis::monomial, 3);
  CHECK_THROWS_AS(v.add(Partition{2}, 1), Error);
  v.add(Partition{2, 1}, make_rational(1, 2));
  v.add(Partition{2, 1}, make_rational(-1, 2));
  CHECK(v.coords().empty());
  CHECK_THROWS_AS(TransitionCache::shared().tables(kMaxTransitionWeight + 1), Error);
  CHECK(std::string(basis_name(Basis::power_sum)) == "p");
}
