#pragma once

// Tame automorphisms as words in diagonal, elementary and affine generators,
// and their reduction to the shape E_1 o ... o E_s o D.
//
// Variable and coordinate indices are 0-based throughout the C++ API; the JSON
// wire format uses 1-based indices.

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "polyaut/endo.hpp"
#include "polyaut/poly.hpp"
#include "polyaut/rational_matrix.hpp"

namespace polyaut {

/// (c_1 X_1, ..., c_n X_n), all c_i nonzero.
struct Diagonal {
  std::vector<Rational> c;

  static Diagonal identity(std::size_t n) { return {std::vector<Rational>(n, Rational(1))}; }
  bool operator==(const Diagonal&) const = default;
};

/// X_i -> X_i + g with g free of X_i; other coordinates fixed.
struct Elementary {
  std::size_t i = 0;
  Poly g;

  bool operator==(const Elementary&) const = default;
};

/// X -> A X + b with A invertible.
struct Affine {
  RationalMatrix a;
  std::vector<Rational> b;

  bool operator==(const Affine&) const = default;
};

using Generator = std::variant<Diagonal, Elementary, Affine>;

/// F = factors[0] o factors[1] o ... o factors[s-1]; the rightmost factor is
/// applied first.
struct TameWord {
  std::size_t n = 1;
  std::vector<Generator> factors;

  bool operator==(const TameWord&) const = default;
};

struct NormalForm {
  std::vector<Elementary> elementaries;
  Diagonal diagonal;

  bool operator==(const NormalForm&) const = default;
};

std::size_t dimension(const Generator& g);

/// Throws InvariantError (or DimensionError) when g is not a valid generator
/// of GA_n.
void validate(const Generator& g, std::size_t n);
void validate(const TameWord& w);

Endo gen_to_endo(const Generator& g);
Endo word_to_endo(const TameWord& w);

Generator invert_generator(const Generator& g);
TameWord invert_word(const TameWord& w);

/// det of the Jacobian of the generator (a constant).
Rational generator_determinant(const Generator& g);

/// Transvection A_{i,j,c}: X_i -> X_i + c X_j.
Elementary transvection(std::size_t n, std::size_t i, std::size_t j, const Rational& c);

/// Translations first, then Gaussian elimination of the linear part. Row swaps
/// are spelled out as A_{i,j,1} o A_{j,i,-1} o A_{i,j,1} o (-X_i). The word
/// contains only Elementary and Diagonal generators.
TameWord affine_to_word(const Affine& a);

/// Returns (E~, D) with D o E = E~ o D. Asserts the identity by composition.
std::pair<Elementary, Diagonal> push_diagonal(const Diagonal& d, const Elementary& e);

/// Entrywise product; corresponds to composition of diagonal maps.
Diagonal merge(const Diagonal& a, const Diagonal& b);

NormalForm normal_form(const TameWord& w);
TameWord to_word(const NormalForm& nf);

/// Recognizes maps of the generator shapes; the identity is reported as the
/// elementary map with i = 0 and g = 0.
std::optional<Elementary> as_elementary(const Endo& f);
std::optional<Diagonal> as_diagonal(const Endo& f);

}  // namespace polyaut
