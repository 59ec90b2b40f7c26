#include "polyaut/witness.hpp"

#include <stdexcept>

#include "polyaut/textio.hpp"

namespace polyaut {

namespace {

Rational power(const Rational& a, unsigned e) {
  Rational p = 1;
  for (unsigned k = 0; k < e; ++k) p *= a;
  return p;
}

Endo chain(const Endo& conj_inv, const Endo& d, const Endo& conj) {
  return compose(compose(conj_inv, d), conj);
}

std::string show(const Endo& f) { return "(" + render_map(f) + ")"; }

std::string verdict(bool ok) { return ok ? "ok" : "FAILED"; }

}  // namespace

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kElementaryScaling:
      return "elementary-scaling";
    case WitnessKind::kElementaryUnimodular:
      return "elementary-unimodular";
    case WitnessKind::kNagata:
      return "nagata";
  }
  return "unknown";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  if (s == "elementary-scaling") return WitnessKind::kElementaryScaling;
  if (s == "elementary-unimodular") return WitnessKind::kElementaryUnimodular;
  if (s == "nagata") return WitnessKind::kNagata;
  throw std::invalid_argument("unknown witness kind '" + s + "'");
}

Witness witness_obs2(const Elementary& e) {
  const std::size_t n = e.g.dimension();
  validate(Generator(e), n);

  const Endo f = gen_to_endo(e);
  const Endo f_inv = gen_to_endo(invert_generator(e));
  Diagonal scale = Diagonal::identity(n);
  scale.c[e.i] = 2;
  const Endo d = gen_to_endo(scale);

  const Endo conjugated = chain(f_inv, d, f);
  std::vector<Poly> expected_coords;
  for (std::size_t k = 0; k < n; ++k) expected_coords.push_back(Poly::variable(n, k));
  expected_coords[e.i] = Poly::variable(n, e.i) * Rational(2) + e.g;
  const Endo expected(std::move(expected_coords));
  if (conjugated != expected) {
    throw VerificationError("witness_obs2: F^-1 o D o F = " + show(conjugated) + ", expected " + show(expected));
  }

  Witness w{WitnessKind::kElementaryScaling, f, f, f_inv, d, {}};
  w.transcript = {
      "target F = " + show(f),
      "conjugator = F, conjugator^-1 = " + show(f_inv),
      "D = " + show(d),
      "F^-1 o D o F = " + show(conjugated),
      "(F^-1 o D o F) o D^-1 = F: " + verdict(true),
  };
  if (!verify_witness(w)) throw VerificationError("witness_obs2: witness does not verify");
  return w;
}

Witness witness_obs3(const Elementary& e, const Rational& a, std::optional<std::size_t> j_opt) {
  const std::size_t n = e.g.dimension();
  validate(Generator(e), n);
  if (n < 2) throw InvariantError("witness_obs3: needs n >= 2");
  if (a == 0 || a == 1 || a == -1) {
    throw InvariantError("witness_obs3: a must not be 0, 1 or -1 (a^(r+1) - 1 may vanish)");
  }
  const std::size_t i = e.i;
  const std::size_t j = j_opt.value_or(i == 0 ? 1 : 0);
  if (j >= n || j == i) throw InvariantError("witness_obs3: j must be a valid index different from i");

  // Each term of g carrying X_j^r is divided by a^(r+1) - 1.
  Poly h = e.g.map_coefficients([&](const Monomial& m, const Rational& c) {
    return Rational(c / (power(a, m[j] + 1) - 1));
  });

  Diagonal scale = Diagonal::identity(n);
  scale.c[i] = a;
  scale.c[j] = 1 / a;
  const Endo d = gen_to_endo(scale);
  const Endo d_inv = gen_to_endo(invert_generator(scale));

  const Elementary conj_gen{i, h};
  const Endo conj = gen_to_endo(conj_gen);
  const Endo conj_inv = gen_to_endo(invert_generator(conj_gen));
  const Endo target = gen_to_endo(e);

  // a (h o D^{-1}) - h must reproduce g.
  const Poly shifted = substitute(h, d_inv.coords()) * a - h;
  if (shifted != e.g) {
    throw VerificationError("witness_obs3: a*h(D^-1) - h = " + render_poly(shifted) + " != g");
  }

  const Endo conjugated = chain(conj_inv, d, conj);
  std::vector<Poly> expected_coords;
  for (std::size_t k = 0; k < n; ++k) expected_coords.push_back(d[k]);
  expected_coords[i] = Poly::variable(n, i) * a + h * a - substitute(h, d.coords());
  if (conjugated != Endo(std::move(expected_coords))) {
    throw VerificationError("witness_obs3: E^-1 o D o E has an unexpected shape: " + show(conjugated));
  }

  const Poly one = Poly::constant(n, 1);
  for (const Endo* factor : {&conj, &conj_inv, &d, &d_inv}) {
    if (jacobian_det(*factor) != one) {
      throw VerificationError("witness_obs3: factor " + show(*factor) + " has Jacobian determinant != 1");
    }
  }

  Witness w{WitnessKind::kElementaryUnimodular, target, conj, conj_inv, d, {}};
  w.transcript = {
      "target F = " + show(target),
      "a = " + render_rational(a) + ", i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1),
      "h = " + render_poly(h),
      "a*h(D^-1) - h = " + render_poly(shifted) + " = g: " + verdict(true),
      "E = " + show(conj),
      "D = " + show(d),
      "E^-1 o D o E = " + show(conjugated),
      "det J of E, E^-1, D, D^-1 = 1: " + verdict(true),
      "(E^-1 o D o E) o D^-1 = F: " + verdict(true),
  };
  if (!verify_witness(w)) throw VerificationError("witness_obs3: witness does not verify");
  return w;
}

Poly nagata_sigma() { return parse_poly("Y^2 + X*Z", 3); }

Endo nagata() {
  const Poly s = nagata_sigma();
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  return Endo({x - s * y * Rational(2) - s * s * z, y + s * z, z});
}

Endo nagata_inverse() {
  const Poly s = nagata_sigma();
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  return Endo({x + s * y * Rational(2) - s * s * z, y - s * z, z});
}

Endo nagata_scaling() { return gen_to_endo(Diagonal{{Rational(1, 4), Rational(1, 2), Rational(1)}}); }

std::vector<ChainCheck> nagata_chain() {
  const Poly s = nagata_sigma();
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  const Endo f = nagata();
  const Endo f_inv = nagata_inverse();
  const Endo l = nagata_scaling();
  const Endo l_inv = gen_to_endo(Diagonal{{Rational(4), Rational(2), Rational(1)}});

  std::vector<ChainCheck> checks;

  const Poly s_l = substitute(s, l.coords());
  checks.push_back({"sigma o L = sigma/4", s_l == s * Rational(1, 4), "sigma o L = " + render_poly(s_l)});

  const bool inverse_ok = verify_inverse_pair(f, f_inv);
  checks.push_back({"F o F^-1 = F^-1 o F = I", inverse_ok, "F^-1 = " + show(f_inv)});

  const Endo conjugated = chain(f_inv, l, f);
  const Endo displayed({x * Rational(1, 4) - s * y * Rational(1, 4) - s * s * z * Rational(1, 16),
                        y * Rational(1, 2) + s * z * Rational(1, 4), z});
  checks.push_back({"F^-1 o L o F = (X/4 - sigma*Y/4 - sigma^2*Z/16, Y/2 + sigma*Z/4, Z)",
                    conjugated == displayed, "F^-1 o L o F = " + show(conjugated)});

  const Endo recovered = compose(conjugated, l_inv);
  checks.push_back({"(F^-1 o L o F) o L^-1 = F", recovered == f, "result = " + show(recovered)});

  const Poly det = jacobian_det(f);
  checks.push_back({"det J(F) = 1", det == Poly::constant(3, 1), "det J(F) = " + render_poly(det)});
  return checks;
}

Witness witness_obs4() {
  const auto checks = nagata_chain();
  Witness w{WitnessKind::kNagata, nagata(), nagata(), nagata_inverse(), nagata_scaling(), {}};
  for (const auto& c : checks) {
    w.transcript.push_back(c.name + ": " + verdict(c.passed) + " [" + c.detail + "]");
    if (!c.passed) throw VerificationError("witness_obs4: check failed: " + c.name);
  }
  if (!verify_witness(w)) throw VerificationError("witness_obs4: witness does not verify");
  return w;
}

bool verify_witness(const Witness& w) {
  const std::size_t n = w.target.dimension();
  if (w.conjugator.dimension() != n || w.conjugator_inverse.dimension() != n || w.diagonal.dimension() != n) {
    return false;
  }
  if (!verify_inverse_pair(w.conjugator, w.conjugator_inverse)) return false;
  const auto diag = as_diagonal(w.diagonal);
  if (!diag) return false;
  if (w.kind == WitnessKind::kElementaryUnimodular) {
    const Poly one = Poly::constant(n, 1);
    if (generator_determinant(*diag) != 1 || jacobian_det(w.conjugator) != one) return false;
  }
  const Endo d_inv = gen_to_endo(invert_generator(*diag));
  return compose(chain(w.conjugator_inverse, w.diagonal, w.conjugator), d_inv) == w.target;
}

}  // namespace polyaut
