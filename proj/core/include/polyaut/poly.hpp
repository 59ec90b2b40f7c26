#pragma once

// Sparse multivariate polynomials over Q with a canonical representation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace polyaut {

using Rational = mpq_class;
using Integer = mpz_class;

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Operands live in different ambient dimensions, or an argument list has
/// the wrong length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator's or certificate's structural invariant does not hold.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold by construction failed to hold.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent vector of a monomial X_1^e_1 ... X_n^e_n.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(const std::vector<Exponent>& exps) : exps_(exps.begin(), exps.end()) {}

  static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1);

  std::size_t dimension() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;

  std::strong_ordering operator<=>(const Monomial& other) const {
    return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), other.exps_.begin(),
                                                  other.exps_.end());
  }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::size_t hash() const;

 private:
  // Inline storage covers every dimension used in practice here.
  boost::container::small_vector<Exponent, 4> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Element of Q[X_1, ..., X_n].
///
/// Terms are kept sorted ascending by exponent vector (lexicographic) with no
/// zero coefficients, so two polynomials are equal iff their term lists are.
class Poly {
 public:
  /// Zero polynomial in dimension n.
  explicit Poly(std::size_t n = 1) : n_(n) {}

  static Poly constant(std::size_t n, const Rational& c);
  static Poly variable(std::size_t n, std::size_t i);
  static Poly monomial(Monomial m, const Rational& c);
  /// Builds a canonical polynomial from unsorted terms; like monomials are
  /// combined and zero sums dropped.
  static Poly from_terms(std::size_t n, std::vector<Term> terms);

  std::size_t dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Maximum total degree over terms; kZeroDegree for the zero polynomial.
  int total_degree() const;
  /// Highest exponent of X_i appearing in any term.
  Monomial::Exponent degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator*(const Poly& p, const Poly& q);

  Poly square() const;
  Poly pow(unsigned e) const;

  /// Applies fn to every coefficient; the monomial is passed alongside.
  template <typename Fn>
  Poly map_coefficients(Fn&& fn) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial, fn(t.monomial, t.coefficient)});
    return from_terms(n_, std::move(out));
  }

  bool operator==(const Poly& q) const;

 private:
  void check_same_dimension(const Poly& q, const char* op) const;

  std::size_t n_;
  std::vector<Term> terms_;
};

/// Caches powers of the substituted polynomials so that one table can serve
/// every coordinate of a composition.
class PowerTable {
 public:
  explicit PowerTable(std::span<const Poly> args);

  const Poly& power(std::size_t i, Monomial::Exponent e);
  std::size_t arity() const { return powers_.size(); }
  std::size_t target_dimension() const { return target_dim_; }

 private:
  std::size_t target_dim_;
  std::vector<std::vector<Poly>> powers_;
};

/// f(args_1, ..., args_n): every X_i replaced by args[i].
Poly substitute(const Poly& p, std::span<const Poly> args);
Poly substitute(const Poly& p, PowerTable& table);

/// Formal partial derivative with respect to X_i (0-based).
Poly partial_derivative(const Poly& p, std::size_t i);

inline int total_degree(const Poly& p) { return p.total_degree(); }

}  // namespace polyaut
