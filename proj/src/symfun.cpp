#include "gammahat/symfun.hpp"

#include <algorithm>

#include "gammahat/error.hpp"

namespace gammahat {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::elementary: return "e";
    case Basis::power_sum: return "p";
  }
  return "?";
}

SymFunVector::SymFunVector(Basis basis, int weight) : basis_(basis), weight_(weight) {
  if (weight < 0) throw Error(Errc::invalid_argument, "negative symmetric function weight");
}

SymFunVector SymFunVector::basis_element(Basis basis, const Partition& lambda) {
  SymFunVector v(basis, lambda.weight());
  v.add(lambda, 1);
  return v;
}

Rational SymFunVector::coord(const Partition& lambda) const {
  auto it = coords_.find(lambda);
  return it == coords_.end() ? Rational(0) : it->second;
}

void SymFunVector::add(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != weight_)
    throw Error(Errc::invalid_argument, "partition (" + lambda.to_string() + ") has weight " +
                                            std::to_string(lambda.weight()) + ", expected " +
                                            std::to_string(weight_));
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

namespace {

using Memo = std::map<std::pair<std::size_t, std::vector<int>>, Integer>;

// Number of 0-1 matrices with row sums rows[i..] and column sums `remaining`.
// This is the coefficient of x^mu in e_{rows} restricted to len(mu) variables.
Integer count_zero_one(const std::vector<int>& rows, std::size_t i, std::vector<int> remaining, Memo& memo) {
  std::sort(remaining.begin(), remaining.end(), std::greater<>());
  while (!remaining.empty() && remaining.back() == 0) remaining.pop_back();
  if (i == rows.size()) return remaining.empty() ? Integer(1) : Integer(0);
  auto key = std::make_pair(i, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Integer total = 0;
  const int need = rows[i];
  const int cols = static_cast<int>(remaining.size());
  // Enumerate column subsets of size `need` by recursion on a bitmask.
  std::vector<int> chosen;
  auto choose = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == need) {
      std::vector<int> next = remaining;
      for (int c : chosen) --next[c];
      total += count_zero_one(rows, i + 1, next, memo);
      return;
    }
    for (int c = start; c < cols; ++c) {
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0);
  memo.emplace(std::move(key), total);
  return total;
}

// Number of maps f: rows -> columns with sum_{f(i)=c} rows[i] = remaining[c].
// This is the coefficient of x^mu in p_{rows}.
Integer count_power_assignments(const std::vector<int>& rows, std::size_t i, std::vector<int> remaining,
                                Memo& memo) {
  std::sort(remaining.begin(), remaining.end(), std::greater<>());
  while (!remaining.empty() && remaining.back() == 0) remaining.pop_back();
  if (i == rows.size()) return remaining.empty() ? Integer(1) : Integer(0);
  auto key = std::make_pair(i, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t c = 0; c < remaining.size(); ++c) {
    if (remaining[c] < rows[i]) continue;
    std::vector<int> next = remaining;
    next[c] -= rows[i];
    total += count_power_assignments(rows, i + 1, next, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

// e_k expressed in power sums, via k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i.
std::vector<std::map<Partition, Rational>> elementary_in_power_sums(int n) {
  std::vector<std::map<Partition, Rational>> e(n + 1);
  e[0][Partition()] = 1;
  for (int k = 1; k <= n; ++k) {
    std::map<Partition, Rational> acc;
    for (int i = 1; i <= k; ++i) {
      const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
      for (const auto& [lambda, c] : e[k - i]) {
        Partition joined = lambda.join(Partition{i});
        acc[joined] += sign * c;
      }
    }
    for (auto& [lambda, c] : acc) {
      c /= k;
      if (c != 0) e[k].emplace(lambda, c);
    }
  }
  return e;
}

std::shared_ptr<const TransitionTables> build_tables(int n) {
  auto t = std::make_shared<TransitionTables>();
  t->weight = n;
  t->index = partitions_of(n);
  const std::size_t size = t->index.size();
  const auto zero = linalg::Matrix(size, std::vector<Rational>(size, Rational(0)));

  t->e_in_m = zero;
  t->p_in_m = zero;
  for (std::size_t a = 0; a < size; ++a) {
    // Memo keys assume a fixed row sequence, so one memo per lambda.
    Memo zero_one_memo;
    Memo power_memo;
    for (std::size_t b = 0; b < size; ++b) {
      const auto& lambda = t->index[a].parts();
      const auto& mu = t->index[b].parts();
      t->e_in_m[a][b] = count_zero_one(lambda, 0, mu, zero_one_memo);
      t->p_in_m[a][b] = count_power_assignments(lambda, 0, mu, power_memo);
    }
  }

  t->e_in_p = zero;
  const auto e = elementary_in_power_sums(n);
  for (std::size_t a = 0; a < size; ++a) {
    std::map<Partition, Rational> product{{Partition(), Rational(1)}};
    for (int part : t->index[a].parts()) {
      std::map<Partition, Rational> next;
      for (const auto& [x, cx] : product)
        for (const auto& [y, cy] : e[part]) next[x.join(y)] += cx * cy;
      product = std::move(next);
    }
    for (const auto& [lambda, c] : product)
      if (c != 0) t->e_in_p[a][partition_index(lambda)] = c;
  }

  t->m_in_e = linalg::inverse(t->e_in_m);
  t->m_in_p = linalg::inverse(t->p_in_m);
  t->p_in_e = linalg::inverse(t->e_in_p);
  return t;
}

}  // namespace

const linalg::Matrix& TransitionTables::matrix(Basis from, Basis to) const {
  using B = Basis;
  if (from == B::elementary && to == B::monomial) return e_in_m;
  if (from == B::monomial && to == B::elementary) return m_in_e;
  if (from == B::power_sum && to == B::monomial) return p_in_m;
  if (from == B::monomial && to == B::power_sum) return m_in_p;
  if (from == B::elementary && to == B::power_sum) return e_in_p;
  if (from == B::power_sum && to == B::elementary) return p_in_e;
  throw Error(Errc::invalid_argument, "no transition matrix from a basis to itself");
}

TransitionCache& TransitionCache::shared() {
  static TransitionCache cache;
  return cache;
}

std::shared_ptr<const TransitionTables> TransitionCache::tables(int n) {
  if (n < 0 || n > kMaxTransitionWeight)
    throw Error(Errc::guard_exceeded, "symmetric function weight " + std::to_string(n) + " exceeds guard " +
                                          std::to_string(kMaxTransitionWeight));
  std::lock_guard lock(mutex_);
  auto& slot = tables_[n];
  if (!slot) slot = build_tables(n);
  return slot;
}

SymFunVector convert(const SymFunVector& v, Basis target) {
  if (v.basis() == target) return v;
  auto t = TransitionCache::shared().tables(v.weight());
  const auto& mat = t->matrix(v.basis(), target);
  SymFunVector out(target, v.weight());
  for (const auto& [lambda, c] : v.coords()) {
    const auto& row = mat[partition_index(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add(t->index[j], c * row[j]);
  }
  return out;
}

namespace {

ZetaPoly hoffman_image(const SymFunVector& v, const ZetaPoly& image_of_p1) {
  const SymFunVector p = convert(v, Basis::power_sum);
  ZetaPoly total;
  for (const auto& [lambda, c] : p.coords()) {
    ZetaPoly term(c);
    for (int part : lambda.parts()) term *= (part == 1) ? image_of_p1 : ZetaPoly::zeta(part);
    total += term;
  }
  return total;
}

}  // namespace

ZetaPoly hoffman_Z(const SymFunVector& v) { return hoffman_image(v, ZetaPoly::gamma()); }

ZetaPoly hoffman_Zhat(const SymFunVector& v) { return hoffman_image(v, ZetaPoly()); }

}  // namespace gammahat
