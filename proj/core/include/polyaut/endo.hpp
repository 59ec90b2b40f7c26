#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyaut/poly.hpp"

namespace polyaut {

/// Polynomial endomorphism G = (G_1, ..., G_n) of affine n-space.
///
/// Composition follows the usual convention (F o G)_i = F_i(G_1, ..., G_n), so
/// F o G applies G first.
class Endo {
 public:
  explicit Endo(std::vector<Poly> coords);

  static Endo identity(std::size_t n);
  static Endo zero(std::size_t n);

  std::size_t dimension() const { return coords_.size(); }
  const Poly& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Poly> coords() const { return coords_; }

  /// deg G = max_i deg G_i; kZeroDegree only for the zero map.
  int degree() const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Endo& other) const = default;

 private:
  std::vector<Poly> coords_;
};

/// n x n matrix of polynomials, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool operator==(const PolyMatrix& other) const = default;

 private:
  std::size_t n_;
  std::vector<Poly> entries_;
};

Endo compose(const Endo& f, const Endo& g);

/// m-fold composition; iterate(g, 0) is the identity.
Endo iterate(const Endo& g, unsigned m);

/// All iterates g^0, ..., g^m computed by successive composition.
std::vector<Endo> iterates(const Endo& g, unsigned m);

/// Coordinatewise sum of coeffs[k] * maps[k].
Endo linear_combination(std::span<const Rational> coeffs, std::span<const Endo> maps);

PolyMatrix jacobian_matrix(const Endo& g);

/// Determinant by Laplace expansion with memoized minors; no division.
Poly determinant(const PolyMatrix& m);

inline Poly jacobian_det(const Endo& g) { return determinant(jacobian_matrix(g)); }

inline bool equals(const Endo& f, const Endo& g) { return f == g; }

/// True iff f o g and g o f are both the identity.
bool verify_inverse_pair(const Endo& f, const Endo& g);

}  // namespace polyaut
