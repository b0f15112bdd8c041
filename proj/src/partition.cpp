#include "gammahat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "gammahat/error.hpp"

namespace gammahat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error(Errc::invalid_argument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() || value <= 0)
      throw Error(Errc::parse_error, "malformed partition '" + std::string(text) + "'");
    if (!parts.empty() && value > parts.back())
      throw Error(Errc::parse_error, "partition '" + std::string(text) + "' is not weakly decreasing");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::mutex listing_mutex;
std::map<int, std::shared_ptr<const std::vector<Partition>>> listings;

std::shared_ptr<const std::vector<Partition>> listing(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "partitions_of requires n >= 0");
  if (n > kMaxPartitionWeight)
    throw Error(Errc::guard_exceeded,
                "partitions_of guard: n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxPartitionWeight));
  std::lock_guard lock(listing_mutex);
  auto& slot = listings[n];
  if (!slot) {
    auto out = std::make_shared<std::vector<Partition>>();
    std::vector<int> prefix;
    extend(n, n, prefix, *out);
    slot = std::move(out);
  }
  return slot;
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return *listing(n); }

int partition_index(const Partition& p) {
  auto all = listing(p.weight());
  // Listing is sorted descending.
  auto it = std::lower_bound(all->begin(), all->end(), p, std::greater<>());
  if (it == all->end() || *it != p) throw Error(Errc::invalid_argument, "partition not found");
  return static_cast<int>(it - all->begin());
}

}  // namespace gammahat
