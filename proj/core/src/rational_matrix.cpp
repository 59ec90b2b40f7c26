#include "polyaut/rational_matrix.hpp"

#include <utility>

namespace polyaut {

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) throw InvariantError("matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational p = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || sgn(m(r, k)) == 0) continue;
      const Rational f = m(r, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(k, j);
        inv(r, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace polyaut
