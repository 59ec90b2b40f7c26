#include "polyaut/endo.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace polyaut {

Endo::Endo(std::vector<Poly> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("endomorphism needs at least one coordinate");
  const std::size_t n = coords_.size();
  for (const auto& c : coords_) {
    if (c.dimension() != n) {
      throw DimensionError("coordinate dimension " + std::to_string(c.dimension()) +
                           " does not match map dimension " + std::to_string(n));
    }
  }
}

Endo Endo::identity(std::size_t n) {
  std::vector<Poly> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(Poly::variable(n, i));
  return Endo(std::move(coords));
}

Endo Endo::zero(std::size_t n) { return Endo(std::vector<Poly>(n, Poly(n))); }

int Endo::degree() const {
  int d = kZeroDegree;
  for (const auto& c : coords_) d = std::max(d, c.total_degree());
  return d;
}

bool Endo::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Endo::is_identity() const { return *this == identity(dimension()); }

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n, Poly(n)) {}

Endo compose(const Endo& f, const Endo& g) {
  if (f.dimension() != g.dimension()) {
    throw DimensionError("compose: dimension mismatch (" + std::to_string(f.dimension()) +
                         " vs " + std::to_string(g.dimension()) + ")");
  }
  PowerTable table(g.coords());
  std::vector<Poly> out;
  out.reserve(f.dimension());
  for (const auto& fi : f.coords()) out.push_back(substitute(fi, table));
  return Endo(std::move(out));
}

std::vector<Endo> iterates(const Endo& g, unsigned m) {
  std::vector<Endo> out;
  out.reserve(m + 1);
  out.push_back(Endo::identity(g.dimension()));
  for (unsigned k = 1; k <= m; ++k) out.push_back(compose(g, out.back()));
  return out;
}

Endo iterate(const Endo& g, unsigned m) {
  Endo result = Endo::identity(g.dimension());
  for (unsigned k = 0; k < m; ++k) result = compose(g, result);
  return result;
}

Endo linear_combination(std::span<const Rational> coeffs, std::span<const Endo> maps) {
  if (coeffs.empty() || coeffs.size() != maps.size()) {
    throw DimensionError("linear_combination: need equally many (>= 1) coefficients and maps");
  }
  const std::size_t n = maps.front().dimension();
  std::vector<Poly> out(n, Poly(n));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].dimension() != n) throw DimensionError("linear_combination: dimension mismatch");
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += maps[k][i] * coeffs[k];
  }
  return Endo(std::move(out));
}

PolyMatrix jacobian_matrix(const Endo& g) {
  const std::size_t n = g.dimension();
  PolyMatrix jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = partial_derivative(g[i], j);
  }
  return jac;
}

Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("determinant of an empty matrix");
  if (n > 20) throw DimensionError("determinant: dimension too large for minor expansion");
  const std::size_t dim = m(0, 0).dimension();

  // minors[mask] is the determinant of the submatrix on the last popcount(mask)
  // rows and the columns in mask. Expanding along the top remaining row builds
  // each minor from minors one size smaller.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::optional<Poly>> minors(std::size_t{1} << n);
  minors[0] = Poly::constant(dim, 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = n - k;
    Poly acc(dim);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) == 0) continue;
      const Poly& entry = m(row, col);
      if (!entry.is_zero()) {
        const Poly& minor = *minors[mask & ~bit];
        if (!minor.is_zero()) {
          Poly prod = entry * minor;
          if (sign > 0) {
            acc += prod;
          } else {
            acc -= prod;
          }
        }
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return *minors[full];
}

bool verify_inverse_pair(const Endo& f, const Endo& g) {
  if (f.dimension() != g.dimension()) return false;
  return compose(f, g).is_identity() && compose(g, f).is_identity();
}

}  // namespace polyaut
