#pragma once

// Small dense exact linear algebra over Q. Sizes here are at most p(12) = 77.

#include <optional>
#include <vector>

#include "gammahat/coeffring.hpp"

namespace gammahat::linalg {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse; throws if singular.
Matrix inverse(const Matrix& a);

/// Solves A X = B for X (A is rows x cols, B is rows x k). Returns nullopt
/// when the system is inconsistent. Free variables, if any, are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace gammahat::linalg
