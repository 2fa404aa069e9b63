#include "chromagraph/ratmat.hpp"

#include <stdexcept>

namespace chromagraph {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  if (rows == 0 || inner == 0) return {};
  for (const auto& row : a)
    if (row.size() != inner) throw std::invalid_argument("shape mismatch");
  const std::size_t cols = b[0].size();
  RationalMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<Rational> mat_vec(const RationalMatrix& m,
                              const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] == 0 || v[j] == 0) continue;
      out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

std::optional<RationalMatrix> mat_inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  RationalMatrix a(m);
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> mat_solve(RationalMatrix m,
                                               std::vector<Rational> b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("shape mismatch");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    const Rational p = m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] /= p;
    b[col] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace chromagraph
