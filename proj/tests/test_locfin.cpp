#include <doctest.h>

#include <algorithm>
#include <vector>

#include "polyaut/degree_probe.hpp"
#include "polyaut/locfin.hpp"
#include "polyaut/tame.hpp"
#include "polyaut/textio.hpp"
#include "polyaut/witness.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"

using namespace polyaut;
using polyaut::testing::Sampler;

namespace {

Endo M(const char* text, std::size_t n) { return parse_map(text, n); }

UniPoly U(std::vector<Rational> c) { return UniPoly(std::move(c)); }

bool is_linear(const Endo& f) {
  for (const auto& c : f.coords()) {
    for (const auto& t : c.terms()) {
      if (t.monomial.total_degree() != 1) return false;
    }
  }
  return true;
}

const UniPoly kTminus1 = U({-1, 1});
const UniPoly kTminus1Sq = U({1, -2, 1});

}  // namespace

TEST_CASE("univariate polynomials") {
  CHECK(U({6, -5, 1}).to_string() == "T^2 - 5*T + 6");
  CHECK(U({Rational(1, 6), Rational(-5, 6), 1}).to_string() == "T^2 - 5/6*T + 1/6");
  CHECK(U({0, 0, -1}).to_string() == "-T^2");
  CHECK(U({3, 0, 0}).degree() == 0);
  CHECK(UniPoly::linear(2) * UniPoly::linear(3) == U({6, -5, 1}));
  CHECK(U({2, 4}).monic() == U({Rational(1, 2), 1}));
  CHECK_THROWS_AS(U({0, 0}), InvariantError);
}

TEST_CASE("certification examples") {
  struct Case {
    Endo g;
    UniPoly mu;
  };
  const std::vector<Case> cases{
      {Endo::identity(2), kTminus1},
      {M("X+Y^2, Y", 2), kTminus1Sq},
      {M("2*X, 3*Y", 2), U({6, -5, 1})},
      {nagata(), U({-1, 3, -3, 1})},
  };
  for (const auto& c : cases) {
    CAPTURE(render_map(c.g));
    const LFReport r = lf_certify(c.g);
    REQUIRE(r.verdict == LFVerdict::kCertifiedLF);
    REQUIRE(r.minimal_polynomial);
    CHECK(*r.minimal_polynomial == c.mu);
    CHECK(r.minimal_polynomial->is_monic());
    CHECK(verify_vanishing(c.g, c.mu));
    CHECK(minimality_certificate(c.g, c.mu));
    CHECK(r.iterations_used == c.mu.degree());
    CHECK(r.iterate_degrees.size() == c.mu.degree() + 1);
    CHECK_FALSE(r.degree_overflow);
  }
}

TEST_CASE("iterate degrees are exact") {
  const LFReport r = lf_certify(nagata());
  CHECK(r.iterate_degrees == std::vector<int>{1, 5, 5, 5});
  CHECK(r.max_degree_seen == 5);
}

TEST_CASE("Henon-type growth exhausts the degree budget") {
  const LFReport r = lf_certify(M("Y, X+Y^2", 2));
  CHECK(r.verdict == LFVerdict::kUnknown);
  CHECK_FALSE(r.minimal_polynomial);
  std::vector<int> doubling;
  for (int d = 1; d <= 512; d *= 2) doubling.push_back(d);
  CHECK(r.iterate_degrees == doubling);
  REQUIRE(r.degree_overflow);
  CHECK(r.degree_overflow->iteration == 10);
  CHECK(r.degree_overflow->lower_bound == 1024);
}

TEST_CASE("small budgets give Unknown, never an error") {
  const LFReport by_degree = lf_certify(M("Y, X+Y^2", 2), {16, 10});
  CHECK(by_degree.verdict == LFVerdict::kUnknown);
  CHECK(by_degree.iterate_degrees == std::vector<int>{1, 2, 4, 8});
  CHECK(by_degree.degree_overflow->iteration == 4);
  const LFReport by_iterations = lf_certify(nagata(), {2, 512});
  CHECK(by_iterations.verdict == LFVerdict::kUnknown);
  CHECK(by_iterations.iterations_used == 2);
  CHECK_THROWS_AS(lf_certify(nagata(), {0, 512}), std::invalid_argument);
  CHECK_THROWS_AS(lf_certify(nagata(), {4, 0}), std::invalid_argument);
}

TEST_CASE("vanishing checks") {
  CHECK(verify_vanishing(Endo::identity(3), kTminus1));
  CHECK(verify_vanishing(M("X+Y^2, Y", 2), kTminus1Sq));
  CHECK_FALSE(verify_vanishing(M("X+Y^2, Y", 2), U({-2, 1})));
  CHECK_FALSE(verify_vanishing(M("X+Y^2, Y", 2), kTminus1));
}

TEST_CASE("minimality checks") {
  CHECK(minimality_certificate(Endo::identity(2), kTminus1));
  CHECK(minimality_certificate(M("X+Y^2, Y", 2), kTminus1Sq));
  const UniPoly cubic = UniPoly::linear(2) * UniPoly::linear(3) * UniPoly::linear(1);
  CHECK(verify_vanishing(M("2*X, 3*Y", 2), cubic));
  CHECK_FALSE(minimality_certificate(M("2*X, 3*Y", 2), cubic));
}

TEST_CASE("inversion from the minimal polynomial") {
  CHECK(inverse_from_minpoly(M("X+Y^2, Y", 2), kTminus1Sq) == M("X-Y^2, Y", 2));
  CHECK(inverse_from_minpoly(M("2*X", 1), U({-2, 1})) == M("1/2*X", 1));
  CHECK(inverse_from_minpoly(nagata(), U({-1, 3, -3, 1})) == nagata_inverse());
  CHECK_THROWS_AS(inverse_from_minpoly(M("X+Y^2, Y", 2), U({-2, 1})), InvariantError);
}

TEST_CASE("a vanishing polynomial with zero constant term is inconsistent") {
  // The zero map is annihilated by T, and is not invertible.
  CHECK_THROWS_AS(inverse_from_minpoly(Endo::zero(2), U({0, 1})), InconsistencyError);
  // (0, Y) is idempotent, so T^2 - T vanishes on it.
  CHECK_THROWS_AS(inverse_from_minpoly(M("0, Y", 2), U({0, -1, 1})), InconsistencyError);
}

TEST_CASE("reversal") {
  CHECK(reversal(kTminus1Sq) == kTminus1Sq);
  CHECK(reversal(U({-2, 1})) == U({Rational(-1, 2), 1}));
  CHECK(reversal(U({6, -5, 1})) == U({Rational(1, 6), Rational(-5, 6), 1}));
  CHECK_THROWS_AS(reversal(U({0, 1})), InvariantError);
}

TEST_CASE("conjugation examples") {
  const Endo g = M("X+Y^2, Y", 2);
  CHECK(conjugate(Endo::identity(2), Endo::identity(2), g) == g);
  CHECK(conjugate(M("2*X, Y", 2), M("1/2*X, Y", 2), g) == M("X+2*Y^2, Y", 2));
  CHECK(conjugate(M("Y, X", 2), M("Y, X", 2), g) == M("X, Y+X^2", 2));
  CHECK_THROWS_AS(conjugate(M("2*X, Y", 2), M("2*X, Y", 2), g), InvariantError);
}

TEST_CASE("conjugates of locally finite maps are locally finite") {
  Sampler s(31);
  for (int trial = 0; trial < 20; ++trial) {
    const TameWord phi = s.word(2, 2, {2, 2}, 2);
    const Endo base = s.coin() ? M("2*X, X+Y", 2) : M("-X+Y^2, 1/2*Y", 2);
    const LFReport rb = lf_certify(base);
    REQUIRE(rb.verdict == LFVerdict::kCertifiedLF);
    const Endo g = conjugate(word_to_endo(phi), word_to_endo(invert_word(phi)), base);
    const LFReport rg = lf_certify(g);
    REQUIRE(rg.verdict == LFVerdict::kCertifiedLF);
    // Left composition by a nonlinear map does not commute with linear
    // combinations, so mu may change; under a linear conjugator it cannot.
    if (is_linear(word_to_endo(phi))) CHECK(*rg.minimal_polynomial == *rb.minimal_polynomial);
    CHECK(verify_inverse_pair(g, inverse_from_minpoly(g, *rg.minimal_polynomial)));
  }
}

TEST_CASE("degree probe never overshoots") {
  Sampler s(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 3));
    std::vector<Poly> fc, gc;
    for (std::size_t k = 0; k < n; ++k) {
      fc.push_back(s.poly(n, {3, 3}));
      gc.push_back(s.poly(n, {3, 3}));
    }
    const Endo f(std::move(fc)), g(std::move(gc));
    const auto bound = composition_degree_lower_bound(f, g);
    const int actual = compose(f, g).degree();
    if (bound) {
      CHECK(*bound <= actual);
      // A pseudo-random line almost surely sees the full degree.
      CHECK(*bound == actual);
    }
  }
  const Endo henon = M("Y, X+Y^2", 2);
  CHECK(composition_degree_lower_bound(henon, iterate(henon, 3)) == 16);
  CHECK_FALSE(composition_degree_lower_bound(Endo::zero(2), henon));
}

TEST_CASE("diagonal maps have one root per distinct entry") {
  Sampler s(33);
  for (int trial = 0; trial < 20; ++trial) {
    const Diagonal d = s.diagonal(3);
    const Endo g = gen_to_endo(d);
    const LFReport r = lf_certify(g);
    REQUIRE(r.verdict == LFVerdict::kCertifiedLF);
    CHECK(verify_vanishing(g, *r.minimal_polynomial));
    CHECK(minimality_certificate(g, *r.minimal_polynomial));
    // The roots of mu are exactly the distinct diagonal entries.
    std::vector<Rational> distinct;
    for (const auto& c : d.c) {
      if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
    }
    CHECK(r.minimal_polynomial->degree() == distinct.size());
  }
}
