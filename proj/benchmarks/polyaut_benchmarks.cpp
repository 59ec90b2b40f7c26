#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "polyaut/degree_probe.hpp"
#include "polyaut/endo.hpp"
#include "polyaut/locfin.hpp"
#include "polyaut/tame.hpp"
#include "polyaut/textio.hpp"
#include "polyaut/witness.hpp"

namespace polyaut {
namespace {

constexpr std::uint64_t kSeed = 20240611;

Endo henon() { return parse_map("Y, -X + Y^2", 2); }

// (X, Y + X^2, Z + X*Y): triangular, so every iterate has degree <= 3 * m.
Endo triangular() { return parse_map("X, Y + X^2, Z + X*Y + 1", 3); }

Poly random_poly(std::mt19937_64& rng, std::size_t n, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int d = deg(rng); d > 0; --d) ++m[var(rng)];
    out.push_back({m, Rational(coeff(rng), 1 + (t % 4))});
  }
  return Poly::from_terms(n, std::move(out));
}

TameWord random_word(std::mt19937_64& rng, std::size_t n, int length) {
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  TameWord w{n, {}};
  for (int k = 0; k < length; ++k) {
    if (k % 2 == 0) {
      for (;;) {
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (auto& row : rows)
          for (auto& x : row) x = entry(rng);
        std::vector<Rational> b(n);
        for (auto& x : b) x = entry(rng);
        Affine a{RationalMatrix(std::move(rows)), std::move(b)};
        if (generator_determinant(a) != 0) {
          w.factors.push_back(std::move(a));
          break;
        }
      }
    } else {
      const std::size_t i = index(rng);
      Poly g(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        g += Poly::monomial(Monomial::variable(n, j, 1 + k % 3), entry(rng));
      }
      w.factors.push_back(Elementary{i, g});
    }
  }
  return w;
}

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const auto terms = static_cast<int>(state.range(0));
  const Poly p = random_poly(rng, 3, 8, terms);
  const Poly q = random_poly(rng, 3, 8, terms);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetComplexityN(terms);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ComposeNagataPower(benchmark::State& state) {
  const Endo f = nagata();
  const Endo fm = iterate(f, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, fm));
}
BENCHMARK(BM_ComposeNagataPower)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HenonIterates(benchmark::State& state) {
  const Endo g = henon();
  for (auto _ : state) benchmark::DoNotOptimize(iterates(g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HenonIterates)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_DegreeProbe(benchmark::State& state) {
  const Endo g = henon();
  const Endo gm = iterate(g, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(composition_degree_lower_bound(g, gm));
}
BENCHMARK(BM_DegreeProbe)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);

void BM_LfCertifyNagata(benchmark::State& state) {
  const Endo f = nagata();
  for (auto _ : state) benchmark::DoNotOptimize(lf_certify(f));
}
BENCHMARK(BM_LfCertifyNagata)->Unit(benchmark::kMillisecond);

void BM_LfCertifyTriangular(benchmark::State& state) {
  const Endo f = triangular();
  for (auto _ : state) benchmark::DoNotOptimize(lf_certify(f));
}
BENCHMARK(BM_LfCertifyTriangular)->Unit(benchmark::kMillisecond);

void BM_LfCertifyHenonUnknown(benchmark::State& state) {
  const Endo g = henon();
  for (auto _ : state) benchmark::DoNotOptimize(lf_certify(g));
}
BENCHMARK(BM_LfCertifyHenonUnknown)->Unit(benchmark::kMillisecond);

void BM_InverseFromMinpoly(benchmark::State& state) {
  const Endo f = nagata();
  const UniPoly mu = *lf_certify(f).minimal_polynomial;
  for (auto _ : state) benchmark::DoNotOptimize(inverse_from_minpoly(f, mu));
}
BENCHMARK(BM_InverseFromMinpoly)->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const TameWord w = random_word(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w));
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_JacobianDet(benchmark::State& state) {
  const Endo f = iterate(nagata(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_det(f));
}
BENCHMARK(BM_JacobianDet)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ParseRenderRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const std::string text = render_poly(random_poly(rng, 4, 6, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(render_poly(parse_poly(text, 4)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseRenderRoundTrip)->RangeMultiplier(4)->Range(4, 256);

void BM_WitnessNagata(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(witness_obs4());
}
BENCHMARK(BM_WitnessNagata)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace polyaut

BENCHMARK_MAIN();
