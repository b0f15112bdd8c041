#pragma once

// Multiplicative sequences, genus evaluation and Pontryagin reduction.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammahat/chern.hpp"
#include "gammahat/coeffring.hpp"
#include "gammahat/partition.hpp"
#include "gammahat/series.hpp"

namespace gammahat {

/// A polynomial in Chern classes: coefficient of c_lambda for each lambda.
/// Zero coefficients are not stored.
using ChernPolynomial = std::map<Partition, ZetaPoly>;

inline constexpr int kMaxSequenceDegree = 12;

class MultiplicativeSequence {
 public:
  /// polys[n] is K_n; polys[0] must be the constant 1.
  MultiplicativeSequence(std::string name, std::vector<ChernPolynomial> polys);

  const std::string& name() const { return name_; }
  int max_degree() const { return static_cast<int>(polys_.size()) - 1; }
  const ChernPolynomial& degree(int n) const { return polys_.at(n); }
  ZetaPoly coefficient(const Partition& lambda) const;

  /// Coefficient-for-coefficient equality; names are ignored.
  friend bool operator==(const MultiplicativeSequence& a, const MultiplicativeSequence& b) {
    return a.polys_ == b.polys_;
  }

 private:
  std::string name_;
  std::vector<ChernPolynomial> polys_;
};

enum class GenusKind { gamma_hat, gamma, a_hat, todd, l };

std::optional<GenusKind> parse_genus_name(std::string_view name);
const char* genus_name(GenusKind kind);
PowerSeries genus_series(GenusKind kind, int order);

/// Multiplicative sequence of phi. The degree-n part of prod_j phi(x_j) is
/// sum_{lambda |- n} (prod_i a_{lambda_i}) m_lambda; rewriting in the
/// elementary basis and reading e_i as c_i gives K_n.
MultiplicativeSequence sequence_from_series(const PowerSeries& phi, int n_max, std::string name = "");

/// Gamma-hat sequence through the Hoffman map: the coefficient of c_lambda
/// is Zhat(m_lambda), computed via the power-sum basis.
MultiplicativeSequence sequence_via_hoffman(int n_max);

MultiplicativeSequence builtin_sequence(GenusKind kind, int n_max);

/// <K_n(c), [M]> for n = dim M.
ZetaPoly genus_evaluate(const MultiplicativeSequence& seq, const ChernData& m);

/// Combination of Pontryagin monomials p_mu, mu |- weight/2.
struct PontryaginExpr {
  int weight = 0;
  std::map<Partition, ZetaPoly> coords;

  friend bool operator==(const PontryaginExpr&, const PontryaginExpr&) = default;
};

/// p_mu written in Chern classes, using p_k = (-1)^k sum_{a+b=2k} (-1)^b c_a c_b.
ChernPolynomial pontryagin_in_chern(const Partition& mu);
ChernPolynomial expand_pontryagin(const PontryaginExpr& expr);

/// Writes K_n as a combination of Pontryagin monomials when possible.
/// Returns nullopt if K_n is not in their span. Requires n even.
std::optional<PontryaginExpr> pontryagin_reduce(const MultiplicativeSequence& seq, int n);

}  // namespace gammahat
