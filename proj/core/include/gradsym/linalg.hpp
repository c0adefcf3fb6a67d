#pragma once

#include <optional>
#include <vector>

#include "gradsym/rational_function.hpp"

namespace gradsym {

/// Dense square or rectangular matrix of scalars, row-major.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(int nvars, int rows, int cols);
Matrix identity_matrix(int nvars, int n);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Exact determinant by fraction-field Gaussian elimination.
Scalar determinant(const Matrix& m);
/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gradsym
