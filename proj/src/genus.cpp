#include "gammahat/genus.hpp"

#include <algorithm>

#include "gammahat/error.hpp"
#include "gammahat/linalg.hpp"
#include "gammahat/symfun.hpp"

namespace gammahat {

namespace {

void check_degree(int n_max) {
  if (n_max < 0) throw Error(Errc::invalid_argument, "maximum degree must be non-negative");
  if (n_max > kMaxSequenceDegree)
    throw Error(Errc::guard_exceeded, "degree " + std::to_string(n_max) + " exceeds guard " +
                                          std::to_string(kMaxSequenceDegree));
}

ChernPolynomial chern_multiply(const ChernPolynomial& a, const ChernPolynomial& b) {
  ChernPolynomial out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      ZetaPoly& slot = out[la.join(lb)];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

MultiplicativeSequence::MultiplicativeSequence(std::string name, std::vector<ChernPolynomial> polys)
    : name_(std::move(name)), polys_(std::move(polys)) {
  if (polys_.empty()) throw Error(Errc::invalid_argument, "multiplicative sequence needs K_0");
  for (std::size_t n = 0; n < polys_.size(); ++n) {
    std::erase_if(polys_[n], [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [lambda, c] : polys_[n])
      if (lambda.weight() != static_cast<int>(n))
        throw Error(Errc::invalid_argument, "coefficient key (" + lambda.to_string() + ") in degree " +
                                                std::to_string(n));
  }
  if (polys_[0] != ChernPolynomial{{Partition(), ZetaPoly(1L)}})
    throw Error(Errc::invalid_argument, "K_0 must be 1");
}

ZetaPoly MultiplicativeSequence::coefficient(const Partition& lambda) const {
  if (lambda.weight() > max_degree()) return ZetaPoly();
  const auto& poly = polys_[lambda.weight()];
  auto it = poly.find(lambda);
  return it == poly.end() ? ZetaPoly() : it->second;
}

std::optional<GenusKind> parse_genus_name(std::string_view name) {
  if (name == "gamma-hat") return GenusKind::gamma_hat;
  if (name == "gamma") return GenusKind::gamma;
  if (name == "a-hat") return GenusKind::a_hat;
  if (name == "todd") return GenusKind::todd;
  if (name == "l") return GenusKind::l;
  return std::nullopt;
}

const char* genus_name(GenusKind kind) {
  switch (kind) {
    case GenusKind::gamma_hat: return "gamma-hat";
    case GenusKind::gamma: return "gamma";
    case GenusKind::a_hat: return "a-hat";
    case GenusKind::todd: return "todd";
    case GenusKind::l: return "l";
  }
  return "?";
}

PowerSeries genus_series(GenusKind kind, int order) {
  switch (kind) {
    case GenusKind::gamma_hat: return series_gamma_hat_recip(order);
    case GenusKind::gamma: return series_gamma_recip(order);
    case GenusKind::a_hat: return series_a_hat(order);
    case GenusKind::todd: return series_todd(order);
    case GenusKind::l: return series_l(order);
  }
  throw Error(Errc::invalid_argument, "unknown genus");
}

MultiplicativeSequence sequence_from_series(const PowerSeries& phi, int n_max, std::string name) {
  check_degree(n_max);
  if (phi[0] != ZetaPoly(1L))
    throw Error(Errc::non_unit_constant, "generating series must have constant term 1");
  if (phi.order() < n_max)
    throw Error(Errc::invalid_argument, "generating series truncated at order " + std::to_string(phi.order()) +
                                            ", need " + std::to_string(n_max));
  std::vector<ChernPolynomial> polys(n_max + 1);
  polys[0][Partition()] = ZetaPoly(1L);
  for (int n = 1; n <= n_max; ++n) {
    auto tables = TransitionCache::shared().tables(n);
    const auto& m_in_e = tables->m_in_e;
    ChernPolynomial& out = polys[n];
    for (std::size_t a = 0; a < tables->index.size(); ++a) {
      // coefficient of m_lambda: prod_i a_{lambda_i}
      ZetaPoly m_coeff(1L);
      for (int part : tables->index[a].parts()) m_coeff *= phi[part];
      if (m_coeff.is_zero()) continue;
      for (std::size_t b = 0; b < tables->index.size(); ++b) {
        if (m_in_e[a][b] == 0) continue;
        out[tables->index[b]] += m_coeff * m_in_e[a][b];
      }
    }
  }
  return MultiplicativeSequence(std::move(name), std::move(polys));
}

MultiplicativeSequence sequence_via_hoffman(int n_max) {
  check_degree(n_max);
  std::vector<ChernPolynomial> polys(n_max + 1);
  polys[0][Partition()] = ZetaPoly(1L);
  for (int n = 1; n <= n_max; ++n)
    for (const auto& lambda : partitions_of(n))
      polys[n][lambda] = hoffman_Zhat(SymFunVector::basis_element(Basis::monomial, lambda));
  return MultiplicativeSequence("gamma-hat (Hoffman)", std::move(polys));
}

MultiplicativeSequence builtin_sequence(GenusKind kind, int n_max) {
  check_degree(n_max);
  return sequence_from_series(genus_series(kind, n_max), n_max, genus_name(kind));
}

ZetaPoly genus_evaluate(const MultiplicativeSequence& seq, const ChernData& m) {
  if (m.dimension() > seq.max_degree())
    throw Error(Errc::dimension_mismatch, "manifold dimension " + std::to_string(m.dimension()) +
                                              " exceeds sequence degree " + std::to_string(seq.max_degree()));
  ZetaPoly total;
  for (const auto& [lambda, c] : seq.degree(m.dimension())) {
    const Integer number = m.number(lambda);
    if (number != 0) total += c * Rational(number);
  }
  return total;
}

ChernPolynomial pontryagin_in_chern(const Partition& mu) {
  ChernPolynomial result{{Partition(), ZetaPoly(1L)}};
  for (int k : mu.parts()) {
    ChernPolynomial pk;
    for (int a = 0; a <= 2 * k; ++a) {
      const int b = 2 * k - a;
      std::vector<int> parts;
      if (a) parts.push_back(a);
      if (b) parts.push_back(b);
      const long sign = ((k + b) % 2 == 0) ? 1 : -1;
      pk[Partition(parts)] += ZetaPoly(sign);
    }
    result = chern_multiply(result, pk);
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

ChernPolynomial expand_pontryagin(const PontryaginExpr& expr) {
  ChernPolynomial out;
  for (const auto& [mu, coeff] : expr.coords)
    for (const auto& [lambda, c] : pontryagin_in_chern(mu)) out[lambda] += coeff * c;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::optional<PontryaginExpr> pontryagin_reduce(const MultiplicativeSequence& seq, int n) {
  if (n < 0 || n % 2 != 0) throw Error(Errc::invalid_argument, "pontryagin_reduce requires an even degree");
  if (n > seq.max_degree())
    throw Error(Errc::dimension_mismatch, "degree " + std::to_string(n) + " exceeds sequence degree");
  const auto rows = partitions_of(n);
  const auto cols = partitions_of(n / 2);

  linalg::Matrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [lambda, c] : pontryagin_in_chern(cols[j])) a[partition_index(lambda)][j] = c.constant_term();

  // The matrix is rational, so each zeta monomial of the right-hand side
  // is an independent column.
  std::vector<ZetaMonomial> monomials;
  for (const auto& [lambda, c] : seq.degree(n))
    for (const auto& [mono, q] : c.terms())
      if (std::find(monomials.begin(), monomials.end(), mono) == monomials.end()) monomials.push_back(mono);

  PontryaginExpr expr;
  expr.weight = n;
  if (monomials.empty()) return expr;

  linalg::Matrix rhs(rows.size(), std::vector<Rational>(monomials.size(), Rational(0)));
  for (const auto& [lambda, c] : seq.degree(n))
    for (std::size_t k = 0; k < monomials.size(); ++k) rhs[partition_index(lambda)][k] = c.coefficient(monomials[k]);

  auto x = linalg::solve(a, rhs);
  if (!x) return std::nullopt;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    ZetaPoly coeff;
    for (std::size_t k = 0; k < monomials.size(); ++k) coeff.add_term(monomials[k], (*x)[j][k]);
    if (!coeff.is_zero()) expr.coords[cols[j]] = coeff;
  }
  return expr;
}

}  // namespace gammahat
