#include <doctest.h>

#include <vector>

#include "polyaut/tame.hpp"
#include "polyaut/textio.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"

using namespace polyaut;
using polyaut::testing::PolyShape;
using polyaut::testing::Sampler;

namespace {

Endo M(const char* text, std::size_t n) { return parse_map(text, n); }
Poly P(const char* text, std::size_t n) { return parse_poly(text, n); }

Diagonal D(std::vector<Rational> c) { return Diagonal{std::move(c)}; }

const PolyShape kWordShape{3, 3};
// Keeps recomposition cheap: the map degree is at most this product.
constexpr unsigned kDegreeCap = 27;

}  // namespace

TEST_CASE("generators as maps") {
  CHECK(gen_to_endo(D({2, 1})) == M("2*X, Y", 2));
  CHECK(gen_to_endo(Elementary{1, P("X^2", 2)}) == M("X, Y+X^2", 2));
  CHECK(gen_to_endo(Affine{RationalMatrix({{1, 2}, {3, 4}}), {5, 6}}) == M("X+2*Y+5, 3*X+4*Y+6", 2));
  CHECK(word_to_endo(TameWord{3, {}}) == Endo::identity(3));
  // The rightmost factor is applied first.
  const TameWord w{2, {Elementary{0, P("Y^2", 2)}, D({1, 3})}};
  CHECK(word_to_endo(w) == M("X+9*Y^2, 3*Y", 2));
}

TEST_CASE("invalid generators are rejected") {
  CHECK_THROWS_AS(validate(D({2, 0}), 2), InvariantError);
  CHECK_THROWS_AS(validate(Elementary{0, P("X*Y", 2)}, 2), InvariantError);
  CHECK_THROWS_AS(validate(Elementary{2, P("Y", 2)}, 2), InvariantError);
  CHECK_THROWS_AS(validate(Affine{RationalMatrix({{1, 2}, {2, 4}}), {0, 0}}, 2), InvariantError);
  CHECK_THROWS_AS(validate(D({1, 1, 1}), 2), DimensionError);
  CHECK_THROWS_AS(gen_to_endo(D({0})), InvariantError);
  CHECK_THROWS_AS(transvection(2, 1, 1, 3), InvariantError);
}

TEST_CASE("inverting generators and words") {
  CHECK(gen_to_endo(invert_generator(Elementary{0, P("Y^2", 2)})) == M("X-Y^2, Y", 2));
  CHECK(std::get<Diagonal>(invert_generator(D({Rational(1, 4), Rational(1, 2), 1}))) == D({4, 2, 1}));
  const Affine a{RationalMatrix({{0, 1}, {1, 1}}), {1, 2}};
  CHECK(verify_inverse_pair(gen_to_endo(a), gen_to_endo(invert_generator(a))));
  Sampler s(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(2, 4));
    const TameWord w = s.word(n, 6, kWordShape, kDegreeCap);
    CHECK(invert_word(invert_word(w)) == w);
    CHECK(compose(word_to_endo(w), word_to_endo(invert_word(w))).is_identity());
  }
}

TEST_CASE("affine maps become elementary and diagonal words") {
  const TameWord swap = affine_to_word(Affine{RationalMatrix({{0, 1}, {1, 0}}), {0, 0}});
  const TameWord expected{2, {transvection(2, 0, 1, 1), transvection(2, 1, 0, -1), transvection(2, 0, 1, 1), D({-1, 1})}};
  CHECK(swap == expected);
  CHECK(word_to_endo(swap) == M("Y, X", 2));

  const TameWord shift = affine_to_word(Affine{RationalMatrix::identity(2), {1, 0}});
  REQUIRE(shift.factors.size() == 1);
  CHECK(std::get<Elementary>(shift.factors[0]) == Elementary{0, Poly::constant(2, 1)});

  CHECK(affine_to_word(Affine{RationalMatrix::identity(3), {0, 0, 0}}).factors.empty());
}

TEST_CASE("affine decomposition recomposes exactly") {
  Sampler s(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 4));
    const Affine a = s.affine(n);
    const TameWord w = affine_to_word(a);
    for (const auto& g : w.factors) CHECK_FALSE(std::holds_alternative<Affine>(g));
    CHECK(word_to_endo(w) == gen_to_endo(a));
  }
}

TEST_CASE("pushing a diagonal past an elementary") {
  const auto [e1, d1] = push_diagonal(D({2, 1}), Elementary{1, P("X^2", 2)});
  CHECK(e1 == Elementary{1, P("1/4*X^2", 2)});
  CHECK(d1 == D({2, 1}));
  CHECK(compose(gen_to_endo(d1), gen_to_endo(Elementary{1, P("X^2", 2)})) == M("2*X, Y+X^2", 2));

  const Elementary e{0, P("Y^3 - Y", 2)};
  const auto [e2, d2] = push_diagonal(Diagonal::identity(2), e);
  CHECK(e2 == e);
  CHECK(d2 == Diagonal::identity(2));

  const auto [e3, d3] = push_diagonal(D({3, 5}), Elementary{0, Poly::constant(2, 7)});
  CHECK(e3 == Elementary{0, Poly::constant(2, 21)});
}

TEST_CASE("pushing satisfies the composition identity on random inputs") {
  Sampler s(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 4));
    const Diagonal d = s.diagonal(n);
    const Elementary e = s.elementary(n, {4, 5});
    const auto [pushed, same] = push_diagonal(d, e);
    CHECK(same == d);
    CHECK(compose(gen_to_endo(d), gen_to_endo(e)) == compose(gen_to_endo(pushed), gen_to_endo(d)));
  }
}

TEST_CASE("normal form examples") {
  const NormalForm single = normal_form(TameWord{2, {D({2, 3})}});
  CHECK(single.elementaries.empty());
  CHECK(single.diagonal == D({2, 3}));

  const NormalForm nf = normal_form(TameWord{2, {D({2, 1}), Elementary{1, P("X^2", 2)}}});
  REQUIRE(nf.elementaries.size() == 1);
  CHECK(nf.elementaries[0] == Elementary{1, P("1/4*X^2", 2)});
  CHECK(nf.diagonal == D({2, 1}));

  const TameWord swap_then_shift{2, {Affine{RationalMatrix::identity(2), {1, -2}},
                                     Affine{RationalMatrix({{0, 1}, {1, 0}}), {0, 0}}}};
  CHECK(word_to_endo(to_word(normal_form(swap_then_shift))) == M("Y+1, X-2", 2));

  const NormalForm empty = normal_form(TameWord{3, {}});
  CHECK(empty.elementaries.empty());
  CHECK(empty.diagonal == Diagonal::identity(3));
}

TEST_CASE("normal forms recompose exactly and have the required shape") {
  Sampler s(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(2, 4));
    const TameWord w = s.word(n, 6, kWordShape, kDegreeCap);
    const NormalForm nf = normal_form(w);
    const TameWord flat = to_word(nf);
    REQUIRE_FALSE(flat.factors.empty());
    CHECK(std::holds_alternative<Diagonal>(flat.factors.back()));
    for (std::size_t k = 0; k + 1 < flat.factors.size(); ++k) {
      CHECK(std::holds_alternative<Elementary>(flat.factors[k]));
    }
    CHECK(word_to_endo(flat) == word_to_endo(w));
  }
}

TEST_CASE("jacobian determinant is the product of generator determinants") {
  Sampler s(45);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(2, 4));
    const TameWord w = s.word(n, 5, {2, 3}, 8);
    Rational product = 1;
    for (const auto& g : w.factors) product *= generator_determinant(g);
    const Endo f = word_to_endo(w);
    CHECK(jacobian_det(f) == Poly::constant(n, product));
    CHECK(testing::jacobian_det_at(f, s.point(n)) == product);
  }
}

TEST_CASE("recognizing generator shapes") {
  CHECK(as_elementary(M("X, Y+X^3", 2)) == Elementary{1, P("X^3", 2)});
  CHECK_FALSE(as_elementary(M("X+Y, Y+X", 2)));
  CHECK_FALSE(as_elementary(M("X*Y, Y", 2)));
  CHECK(as_elementary(Endo::identity(2)) == Elementary{0, Poly(2)});
  CHECK(as_diagonal(M("2*X, -Y", 2)) == D({2, -1}));
  CHECK_FALSE(as_diagonal(M("2*X+1, Y", 2)));
  CHECK_FALSE(as_diagonal(M("0, Y", 2)));
}
