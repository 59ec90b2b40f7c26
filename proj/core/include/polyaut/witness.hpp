#pragma once

// Conjugation certificates showing that a map lies in every normal subgroup
// that contains the diagonal automorphisms.
//
// A witness stores a conjugator C, its inverse and a diagonal map D such that
//
//     (C^{-1} o D o C) o D^{-1} = target.
//
// The left side is a conjugate of D times a diagonal map, so any normal
// subgroup containing the diagonals contains the target.

#include <optional>
#include <string>
#include <vector>

#include "polyaut/endo.hpp"
#include "polyaut/tame.hpp"

namespace polyaut {

enum class WitnessKind {
  /// Elementary target, conjugated by itself, D = 2 on the moved coordinate.
  kElementaryScaling,
  /// Elementary target, every factor with Jacobian determinant 1.
  kElementaryUnimodular,
  /// Nagata's map conjugating L = (X/4, Y/2, Z).
  kNagata,
};

const char* to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(const std::string& s);

struct Witness {
  WitnessKind kind = WitnessKind::kElementaryScaling;
  Endo target;
  Endo conjugator;
  Endo conjugator_inverse;
  Endo diagonal;
  /// Human-readable construction log; not part of the certificate.
  std::vector<std::string> transcript;
};

/// Builds the witness for X_i -> X_i + g with D = (.., 2 X_i, ..) and C = e.
/// Also checks that C^{-1} o D o C moves only coordinate i, to 2 X_i + g.
Witness witness_obs2(const Elementary& e);

/// Jacobian-preserving witness. With g = sum_r g_r X_j^r (g_r free of X_i,
/// X_j), h = sum_r g_r X_j^r / (a^{r+1} - 1), C = (X_i + h) and
/// D = (.., a X_i, .., X_j / a, ..). Requires n >= 2, j != i, a not in {0, 1, -1}.
/// j defaults to the smallest index different from i.
Witness witness_obs3(const Elementary& e, const Rational& a = 2, std::optional<std::size_t> j = std::nullopt);

/// sigma = Y^2 + X Z
Poly nagata_sigma();
/// (X - 2 sigma Y - sigma^2 Z, Y + sigma Z, Z)
Endo nagata();
/// (X + 2 sigma Y - sigma^2 Z, Y - sigma Z, Z)
Endo nagata_inverse();
/// L = (X/4, Y/2, Z)
Endo nagata_scaling();

struct ChainCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Evaluates the five identities behind the Nagata witness:
/// sigma o L = sigma / 4; F o F^{-1} = F^{-1} o F = I;
/// F^{-1} o L o F = (X/4 - sigma Y/4 - sigma^2 Z/16, Y/2 + sigma Z/4, Z);
/// (F^{-1} o L o F) o L^{-1} = F; det J(F) = 1.
std::vector<ChainCheck> nagata_chain();

/// Throws VerificationError if any link of nagata_chain() fails.
Witness witness_obs4();

/// Re-checks every witness invariant from scratch.
bool verify_witness(const Witness& w);

}  // namespace polyaut
