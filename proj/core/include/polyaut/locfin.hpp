#pragma once

// Locally finite automorphisms: a map G is locally finite iff some nonzero
// p(T) = a_0 + a_1 T + ... + a_d T^d satisfies a_0 I + a_1 G + ... + a_d G^d = 0,
// where G^m is the m-th iterate and the sum is taken coordinatewise. The monic
// generator of the ideal of such p is the minimal polynomial of G.

#include <cstddef>
#include <map>
#include <utility>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyaut/endo.hpp"
#include "polyaut/linear_dependence.hpp"
#include "polyaut/poly.hpp"

namespace polyaut {

/// A claimed automorphism and its minimal polynomial disagree (for example
/// mu(0) = 0, which no automorphism admits).
class InconsistencyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Univariate polynomial a_0 + a_1 T + ... + a_d T^d over Q, never zero.
class UniPoly {
 public:
  /// Coefficients from a_0 upward; trailing zeros are dropped. Throws
  /// InvariantError if every coefficient is zero.
  explicit UniPoly(std::vector<Rational> coeffs);

  /// T - root
  static UniPoly linear(const Rational& root);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& constant_term() const { return coeffs_.front(); }

  bool is_monic() const { return leading() == 1; }
  UniPoly monic() const;

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  bool operator==(const UniPoly&) const = default;

  /// e.g. "T^2 - 5*T + 6"
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

struct LFBudget {
  unsigned max_iter = 16;
  int max_deg = 512;
};

enum class LFVerdict { kCertifiedLF, kUnknown };

struct LFReport {
  LFVerdict verdict = LFVerdict::kUnknown;
  std::optional<UniPoly> minimal_polynomial;
  /// deg G^0, deg G^1, ... for every iterate computed.
  std::vector<int> iterate_degrees;
  LFBudget budget;
  unsigned iterations_used = 0;
  int max_degree_seen = 0;
  /// Set when G^m was shown to exceed max_deg without expanding it: a proven
  /// lower bound on deg G^m. iterate_degrees then stops at G^(m-1).
  struct DegreeOverflow {
    unsigned iteration = 0;
    int lower_bound = 0;
  };
  std::optional<DegreeOverflow> degree_overflow;
};

/// Searches for the first linear dependence among G^0, G^1, ... within the
/// budget. Never reports "not locally finite": running out of budget yields
/// kUnknown with the degree sequence as evidence. Before expanding an iterate
/// whose degree could exceed max_deg, a modular probe may prove that it does;
/// the proof is recorded in degree_overflow. A certified result has been
/// re-checked by verify_vanishing and minimality_certificate.
LFReport lf_certify(const Endo& g, LFBudget budget = {});

/// Flattens a map into one sparse vector over (coordinate, monomial) columns.
/// The column index map is shared so successive maps use a common basis.
class IterateBasis {
 public:
  SparseVector flatten(const Endo& g);

 private:
  std::map<std::pair<std::size_t, Monomial>, std::size_t> columns_;
};

/// p(G) = 0, evaluated exactly.
bool verify_vanishing(const Endo& g, const UniPoly& p);

/// True iff no relation of degree < deg mu exists, i.e. G^0..G^(d-1) are
/// linearly independent. Does not re-check that mu vanishes.
bool minimality_certificate(const Endo& g, const UniPoly& mu);

/// G^{-1} = -(1/a_0) * sum_{m>=1} a_m G^(m-1), from mu(G) = 0 composed on the
/// right with G^{-1}. The result is checked to be a two-sided inverse.
Endo inverse_from_minpoly(const Endo& g, const UniPoly& mu);

/// T^d p(1/T), normalized monic: vanishes on G^{-1} when p vanishes on G.
UniPoly reversal(const UniPoly& p);

/// phi o g o phi_inv after checking that (phi, phi_inv) is an inverse pair.
Endo conjugate(const Endo& phi, const Endo& phi_inv, const Endo& g);

}  // namespace polyaut
