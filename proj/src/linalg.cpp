#include "gammahat/linalg.hpp"

#include "gammahat/error.hpp"

namespace gammahat::linalg {

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  auto x = solve(a, identity(n));
  if (!x) throw Error(Errc::invalid_argument, "singular matrix");
  // solve() zero-fills free variables, so check A X = I.
  if (multiply(a, *x) != identity(n)) throw Error(Errc::invalid_argument, "singular matrix");
  return *x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t k = rows ? b[0].size() : 0;
  Matrix aug(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    aug[i] = a[i];
    aug[i].insert(aug[i].end(), b[i].begin(), b[i].end());
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][c];
    for (auto& v : aug[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j < cols + k; ++j)
        if (aug[r][j] != 0) aug[i][j] -= f * aug[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = cols; j < cols + k; ++j)
      if (aug[i][j] != 0) return std::nullopt;
  Matrix x(cols, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) x[pivot_cols[i]][j] = aug[i][cols + j];
  return x;
}

}  // namespace gammahat::linalg
