#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gammahat {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into non-increasing order; rejects non-positive parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }

  /// Multiplicity of each part value, indexed 0..max part.
  std::vector<int> multiplicities() const;
  /// Union of parts (the partition of the product of two monomials).
  Partition join(const Partition& other) const;

  /// "3,1,1"; the empty partition renders as "".
  std::string to_string() const;
  /// Parses "3,1,1". Parts must already be weakly decreasing.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence. Within one weight the canonical
  /// listing order is the reverse of this.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline constexpr int kMaxPartitionWeight = 40;

/// All partitions of n in reverse lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

/// Position of `p` within partitions_of(p.weight()).
int partition_index(const Partition& p);

}  // namespace gammahat
