#pragma once

// Symmetric functions of fixed weight in the monomial, elementary and
// power-sum bases, and the Hoffman homomorphisms Z and Z-hat.

#include <map>
#include <memory>
#include <mutex>

#include "gammahat/coeffring.hpp"
#include "gammahat/linalg.hpp"
#include "gammahat/partition.hpp"

namespace gammahat {

enum class Basis { monomial, elementary, power_sum };

const char* basis_name(Basis b);

class SymFunVector {
 public:
  SymFunVector(Basis basis, int weight);
  static SymFunVector basis_element(Basis basis, const Partition& lambda);

  Basis basis() const { return basis_; }
  int weight() const { return weight_; }
  const std::map<Partition, Rational>& coords() const { return coords_; }
  Rational coord(const Partition& lambda) const;

  /// Adds c to the coordinate of lambda; lambda must have this weight.
  void add(const Partition& lambda, const Rational& c);

  friend bool operator==(const SymFunVector&, const SymFunVector&) = default;

 private:
  Basis basis_;
  int weight_;
  std::map<Partition, Rational> coords_;
};

inline constexpr int kMaxTransitionWeight = 16;

/// Exact change-of-basis matrices for one weight. Row lambda of X_in_Y holds
/// the Y-coordinates of the basis element X_lambda; rows and columns follow
/// partitions_of(n).
struct TransitionTables {
  int weight = 0;
  std::vector<Partition> index;
  linalg::Matrix e_in_m, m_in_e;
  linalg::Matrix p_in_m, m_in_p;
  linalg::Matrix e_in_p, p_in_e;

  const linalg::Matrix& matrix(Basis from, Basis to) const;
};

/// Append-only cache, safe for concurrent readers: each weight is built
/// once under the lock and then shared immutably.
class TransitionCache {
 public:
  static TransitionCache& shared();
  std::shared_ptr<const TransitionTables> tables(int n);

 private:
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const TransitionTables>> tables_;
};

SymFunVector convert(const SymFunVector& v, Basis target);

/// Z(p_1) = gamma, Z(p_i) = zeta(i).
ZetaPoly hoffman_Z(const SymFunVector& v);
/// Same as Z with p_1 sent to zero.
ZetaPoly hoffman_Zhat(const SymFunVector& v);

}  // namespace gammahat
