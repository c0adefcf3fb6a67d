#include "gradsym/linalg.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

int nvars_of(const Matrix& m) {
  if (m.empty() || m[0].empty()) throw UsageError("empty matrix");
  return m[0][0].nvars();
}

// Pivot choice favours the simplest nonzero entry to limit expression swell.
std::size_t entry_size(const Scalar& s) {
  return s.numerator().terms().size() + s.denominator().terms().size();
}

}  // namespace

Matrix zero_matrix(int nvars, int rows, int cols) {
  return Matrix(rows, std::vector<Scalar>(cols, Scalar(nvars)));
}

Matrix identity_matrix(int nvars, int n) {
  Matrix m = zero_matrix(nvars, n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(nvars, Rational(1));
  return m;
}

Matrix transpose(const Matrix& m) {
  const int nv = nvars_of(m);
  Matrix t = zero_matrix(nv, static_cast<int>(m[0].size()), static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a[0].size() != b.size()) throw UsageError("matrix shapes do not match");
  const int nv = nvars_of(a);
  Matrix c = zero_matrix(nv, static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Scalar determinant(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  const int nv = nvars_of(m);
  Matrix a = m;
  Scalar det(nv, Rational(1));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero() && (pivot < 0 || entry_size(a[r][col]) < entry_size(a[pivot][col])))
        pivot = r;
    if (pivot < 0) return Scalar(nv);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Scalar inv = a[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col] * inv;
      for (int c = col; c < n; ++c)
        if (!a[col][c].is_zero()) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  const int nv = nvars_of(m);
  Matrix a = m;
  Matrix inv = identity_matrix(nv, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero() && (pivot < 0 || entry_size(a[r][col]) < entry_size(a[pivot][col])))
        pivot = r;
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar p = a[col][col].inverse();
    for (int c = 0; c < n; ++c) {
      if (!a[col][c].is_zero()) a[col][c] *= p;
      if (!inv[col][c].is_zero()) inv[col][c] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (int c = 0; c < n; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= factor * a[col][c];
        if (!inv[col][c].is_zero()) inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace gradsym
