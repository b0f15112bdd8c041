#pragma once

// Manifolds modelled by their Chern numbers.

#include <map>
#include <string>
#include <string_view>

#include "gammahat/coeffring.hpp"
#include "gammahat/partition.hpp"

namespace gammahat {

class ChernData {
 public:
  ChernData(std::string name, int complex_dimension);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  /// Chern number c_lambda[M]; absent keys are zero.
  Integer number(const Partition& lambda) const;
  /// Zero values are not stored.
  const std::map<Partition, Integer>& numbers() const { return numbers_; }

  void set(const Partition& lambda, const Integer& value);

  /// Compares dimension and Chern numbers; the name is only a label.
  friend bool operator==(const ChernData& a, const ChernData& b) {
    return a.dimension_ == b.dimension_ && a.numbers_ == b.numbers_;
  }

 private:
  std::string name_;
  int dimension_;
  std::map<Partition, Integer> numbers_;
};

/// The point: dimension 0 with c_() = 1. Unit for chern_product.
ChernData chern_point();
/// CP^n, total Chern class (1+h)^(n+1).
ChernData chern_cpn(int n);
ChernData chern_k3();
ChernData chern_s2();
/// K3 x S^2 with LeBrun's complex structure J_n.
ChernData chern_lebrun(int n);
/// Product manifold with the product almost complex structure.
ChernData chern_product(const ChernData& a, const ChernData& b);

/// Parses {"name": ..., "complex_dimension": n, "chern_numbers": {"2,1": 48, ...}}.
/// Values may be JSON integers or decimal strings (for numbers beyond 64 bits).
ChernData chern_from_json(std::string_view text);
std::string chern_to_json(const ChernData& m);

/// Manifold expression: cpn:<n> | k3 | s2 | point | lebrun:<n> |
/// product(<spec>,<spec>) | file:<path>.
ChernData parse_manifold_spec(std::string_view spec);

}  // namespace gammahat
