#include "polyaut/tame.hpp"

#include <string>

#include "polyaut/textio.hpp"

namespace polyaut {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void push_swap(std::vector<Generator>& out, std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  out.emplace_back(transvection(n, i, j, 1));
  out.emplace_back(transvection(n, j, i, -1));
  out.emplace_back(transvection(n, i, j, 1));
  Diagonal flip = Diagonal::identity(n);
  flip.c[i] = -1;
  out.emplace_back(std::move(flip));
}

}  // namespace

std::size_t dimension(const Generator& g) {
  return std::visit(Overloaded{
                        [](const Diagonal& d) { return d.c.size(); },
                        [](const Elementary& e) { return e.g.dimension(); },
                        [](const Affine& a) { return a.b.size(); },
                    },
                    g);
}

void validate(const Generator& g, std::size_t n) {
  std::visit(Overloaded{
                 [n](const Diagonal& d) {
                   if (d.c.size() != n) throw DimensionError("diagonal: expected " + std::to_string(n) + " entries");
                   for (const auto& c : d.c) {
                     if (sgn(c) == 0) throw InvariantError("diagonal: entries must be nonzero");
                   }
                 },
                 [n](const Elementary& e) {
                   if (e.g.dimension() != n) throw DimensionError("elementary: g has the wrong dimension");
                   if (e.i >= n) throw InvariantError("elementary: index out of range");
                   if (e.g.involves(e.i)) {
                     throw InvariantError("elementary: g must not involve x" + std::to_string(e.i + 1));
                   }
                 },
                 [n](const Affine& a) {
                   if (a.a.rows() != n || a.a.cols() != n || a.b.size() != n) {
                     throw DimensionError("affine: expected an " + std::to_string(n) + "x" + std::to_string(n) +
                                          " matrix and " + std::to_string(n) + " offsets");
                   }
                   if (sgn(determinant(a.a)) == 0) throw InvariantError("affine: matrix is singular");
                 },
             },
             g);
}

void validate(const TameWord& w) {
  if (w.n == 0) throw DimensionError("word dimension must be at least 1");
  for (const auto& g : w.factors) validate(g, w.n);
}

Endo gen_to_endo(const Generator& g) {
  const std::size_t n = dimension(g);
  validate(g, n);
  return std::visit(Overloaded{
                        [n](const Diagonal& d) {
                          std::vector<Poly> coords;
                          for (std::size_t i = 0; i < n; ++i) coords.push_back(Poly::variable(n, i) * d.c[i]);
                          return Endo(std::move(coords));
                        },
                        [n](const Elementary& e) {
                          std::vector<Poly> coords;
                          for (std::size_t i = 0; i < n; ++i) coords.push_back(Poly::variable(n, i));
                          coords[e.i] += e.g;
                          return Endo(std::move(coords));
                        },
                        [n](const Affine& a) {
                          std::vector<Poly> coords;
                          for (std::size_t i = 0; i < n; ++i) {
                            Poly row = Poly::constant(n, a.b[i]);
                            for (std::size_t j = 0; j < n; ++j) row += Poly::variable(n, j) * a.a(i, j);
                            coords.push_back(std::move(row));
                          }
                          return Endo(std::move(coords));
                        },
                    },
                    g);
}

Endo word_to_endo(const TameWord& w) {
  validate(w);
  Endo result = Endo::identity(w.n);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    result = compose(gen_to_endo(*it), result);
  }
  return result;
}

Generator invert_generator(const Generator& g) {
  validate(g, dimension(g));
  return std::visit(Overloaded{
                        [](const Diagonal& d) -> Generator {
                          Diagonal inv = d;
                          for (auto& c : inv.c) c = 1 / c;
                          return inv;
                        },
                        [](const Elementary& e) -> Generator { return Elementary{e.i, -e.g}; },
                        [](const Affine& a) -> Generator {
                          RationalMatrix inv = inverse(a.a);
                          std::vector<Rational> shift = inv * a.b;
                          for (auto& x : shift) x = -x;
                          return Affine{std::move(inv), std::move(shift)};
                        },
                    },
                    g);
}

TameWord invert_word(const TameWord& w) {
  TameWord out{w.n, {}};
  out.factors.reserve(w.factors.size());
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) out.factors.push_back(invert_generator(*it));
  return out;
}

Rational generator_determinant(const Generator& g) {
  return std::visit(Overloaded{
                        [](const Diagonal& d) {
                          Rational p = 1;
                          for (const auto& c : d.c) p *= c;
                          return p;
                        },
                        [](const Elementary&) { return Rational(1); },
                        [](const Affine& a) { return determinant(a.a); },
                    },
                    g);
}

Elementary transvection(std::size_t n, std::size_t i, std::size_t j, const Rational& c) {
  if (i == j || i >= n || j >= n) throw InvariantError("transvection: need distinct indices in range");
  return Elementary{i, Poly::variable(n, j) * c};
}

TameWord affine_to_word(const Affine& a) {
  const std::size_t n = a.b.size();
  validate(Generator(a), n);
  TameWord word{n, {}};

  // X -> A X + b is (translation by b) o (X -> A X); translations along
  // different axes commute.
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.b[i]) != 0) word.factors.emplace_back(Elementary{i, Poly::constant(n, a.b[i])});
  }

  // Reduce A to a diagonal matrix by row operations O_k ... O_1 A = D, so that
  // A = O_1^{-1} o ... o O_k^{-1} o D. Row operations are left multiplications,
  // and matrix products correspond to composition of the linear maps.
  RationalMatrix m = a.a;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      push_swap(word.factors, n, k, pivot);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
      // row_r -= f row_k is undone by row_r += f row_k.
      word.factors.emplace_back(transvection(n, r, k, f));
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t r = 0; r < k; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      m(r, k) = 0;
      word.factors.emplace_back(transvection(n, r, k, f));
    }
  }

  Diagonal d = Diagonal::identity(n);
  for (std::size_t k = 0; k < n; ++k) d.c[k] = m(k, k);
  if (d != Diagonal::identity(n)) word.factors.emplace_back(std::move(d));
  return word;
}

Diagonal merge(const Diagonal& a, const Diagonal& b) {
  if (a.c.size() != b.c.size()) throw DimensionError("merge: diagonal dimension mismatch");
  Diagonal out = a;
  for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] *= b.c[k];
  return out;
}

std::pair<Elementary, Diagonal> push_diagonal(const Diagonal& d, const Elementary& e) {
  const std::size_t n = d.c.size();
  validate(Generator(d), n);
  validate(Generator(e), n);
  // D o E has X_i-coordinate c_i X_i + c_i g(X); E~ o D has c_i X_i + g~(c X).
  // Matching them gives g~(X) = c_i g(X_1/c_1, ..., X_n/c_n).
  const Rational ci = d.c[e.i];
  Poly g_tilde = e.g.map_coefficients([&](const Monomial& m, const Rational& coeff) {
    Rational scaled = coeff * ci;
    for (std::size_t l = 0; l < n; ++l) {
      for (Monomial::Exponent k = 0; k < m[l]; ++k) scaled /= d.c[l];
    }
    return scaled;
  });
  Elementary pushed{e.i, std::move(g_tilde)};
  if (compose(gen_to_endo(d), gen_to_endo(e)) != compose(gen_to_endo(pushed), gen_to_endo(d))) {
    throw VerificationError("push_diagonal: D o E != E~ o D");
  }
  return {std::move(pushed), d};
}

NormalForm normal_form(const TameWord& w) {
  validate(w);
  // Invariant: the prefix processed so far equals elementaries o diagonal.
  NormalForm nf{{}, Diagonal::identity(w.n)};
  auto absorb = [&nf](const Generator& g) {
    if (const auto* d = std::get_if<Diagonal>(&g)) {
      nf.diagonal = merge(nf.diagonal, *d);
    } else if (const auto* e = std::get_if<Elementary>(&g)) {
      if (e->g.is_zero()) return;
      auto [pushed, same] = push_diagonal(nf.diagonal, *e);
      nf.elementaries.push_back(std::move(pushed));
    }
  };
  for (const auto& g : w.factors) {
    if (const auto* a = std::get_if<Affine>(&g)) {
      for (const auto& piece : affine_to_word(*a).factors) absorb(piece);
    } else {
      absorb(g);
    }
  }
  return nf;
}

TameWord to_word(const NormalForm& nf) {
  TameWord w{nf.diagonal.c.size(), {}};
  for (const auto& e : nf.elementaries) w.factors.emplace_back(e);
  w.factors.emplace_back(nf.diagonal);
  return w;
}

std::optional<Elementary> as_elementary(const Endo& f) {
  const std::size_t n = f.dimension();
  std::optional<std::size_t> changed;
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k] != Poly::variable(n, k)) {
      if (changed) return std::nullopt;
      changed = k;
    }
  }
  if (!changed) return Elementary{0, Poly(n)};
  Poly g = f[*changed] - Poly::variable(n, *changed);
  if (g.involves(*changed)) return std::nullopt;
  return Elementary{*changed, std::move(g)};
}

std::optional<Diagonal> as_diagonal(const Endo& f) {
  const std::size_t n = f.dimension();
  Diagonal d = Diagonal::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Monomial xk = Monomial::variable(n, k);
    if (f[k].size() != 1 || f[k].terms().front().monomial != xk) return std::nullopt;
    d.c[k] = f[k].terms().front().coefficient;
  }
  return d;
}

}  // namespace polyaut
