#include "polyaut/degree_probe.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace polyaut {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  // 2^61 = 1 (mod p), so fold the high bits onto the low ones.
  const std::uint64_t folded = static_cast<std::uint64_t>(prod & kPrime) + static_cast<std::uint64_t>(prod >> 61);
  return folded >= kPrime ? folded - kPrime : folded;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const Integer& z) {
  const std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
  return r;
}

/// A polynomial with coefficients reduced into F_p.
struct ModPoly {
  std::vector<std::pair<const Monomial*, std::uint64_t>> terms;
  std::vector<Monomial::Exponent> max_exp;
};

std::optional<ModPoly> reduce_poly(const Poly& p) {
  ModPoly out;
  out.max_exp.assign(p.dimension(), 0);
  for (const auto& t : p.terms()) {
    const std::uint64_t den = reduce(t.coefficient.get_den());
    if (den == 0) return std::nullopt;
    const std::uint64_t c = mul_mod(reduce(t.coefficient.get_num()), pow_mod(den, kPrime - 2));
    out.terms.emplace_back(&t.monomial, c);
    for (std::size_t l = 0; l < p.dimension(); ++l) out.max_exp[l] = std::max(out.max_exp[l], t.monomial[l]);
  }
  return out;
}

class ModMap {
 public:
  static std::optional<ModMap> from(const Endo& f) {
    ModMap m;
    for (const auto& coord : f.coords()) {
      auto reduced = reduce_poly(coord);
      if (!reduced) return std::nullopt;
      m.coords_.push_back(std::move(*reduced));
    }
    return m;
  }

  std::vector<std::uint64_t> operator()(const std::vector<std::uint64_t>& x) {
    const std::size_t n = x.size();
    powers_.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
      Monomial::Exponent top = 0;
      for (const auto& c : coords_) top = std::max(top, c.max_exp[l]);
      powers_[l].assign(top + 1, 1);
      for (Monomial::Exponent e = 1; e <= top; ++e) powers_[l][e] = mul_mod(powers_[l][e - 1], x[l]);
    }
    std::vector<std::uint64_t> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
      std::uint64_t acc = 0;
      for (const auto& [m, coeff] : c.terms) {
        std::uint64_t v = coeff;
        for (std::size_t l = 0; l < n; ++l) {
          if ((*m)[l] != 0) v = mul_mod(v, powers_[l][(*m)[l]]);
        }
        acc = add_mod(acc, v);
      }
      out.push_back(acc);
    }
    return out;
  }

 private:
  std::vector<ModPoly> coords_;
  std::vector<std::vector<std::uint64_t>> powers_;
};

}  // namespace

std::optional<int> composition_degree_lower_bound(const Endo& g, const Endo& h, std::uint64_t seed) {
  if (g.dimension() != h.dimension()) throw DimensionError("composition_degree_lower_bound: dimension mismatch");
  const int dg = g.degree();
  const int dh = h.degree();
  if (dg <= 0 || dh <= 0) return std::nullopt;
  const std::size_t points = static_cast<std::size_t>(dg) * static_cast<std::size_t>(dh) + 1;
  if (points > kMaxProbePoints) return std::nullopt;

  auto gm = ModMap::from(g);
  auto hm = ModMap::from(h);
  if (!gm || !hm) return std::nullopt;

  const std::size_t n = g.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, kPrime - 1);
  std::vector<std::uint64_t> base(n), dir(n);
  for (std::size_t l = 0; l < n; ++l) {
    base[l] = dist(rng);
    dir[l] = dist(rng);
  }

  // values[i][t] = (G o H)_i(base + t dir)
  std::vector<std::vector<std::uint64_t>> values(n, std::vector<std::uint64_t>(points));
  std::vector<std::uint64_t> x(n);
  for (std::size_t t = 0; t < points; ++t) {
    for (std::size_t l = 0; l < n; ++l) x[l] = add_mod(base[l], mul_mod(dir[l], t));
    const auto y = (*gm)((*hm)(x));
    for (std::size_t i = 0; i < n; ++i) values[i][t] = y[i];
  }

  // The k-th forward difference at 0 is k! times the k-th divided difference,
  // and k! is a unit mod p, so the last nonzero one gives the degree.
  int bound = kZeroDegree;
  for (auto& v : values) {
    int deg = kZeroDegree;
    for (std::size_t k = 0; k < points; ++k) {
      if (v[0] != 0) deg = static_cast<int>(k);
      for (std::size_t t = 0; t + 1 < points - k; ++t) v[t] = sub_mod(v[t + 1], v[t]);
    }
    bound = std::max(bound, deg);
  }
  return bound;
}

}  // namespace polyaut
