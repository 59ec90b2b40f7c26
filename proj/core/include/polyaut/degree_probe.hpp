#pragma once

// Cheap lower bounds on the total degree of a composition, obtained without
// expanding it symbolically.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "polyaut/endo.hpp"

namespace polyaut {

/// Largest number of sample points a probe will use.
inline constexpr std::size_t kMaxProbePoints = std::size_t{1} << 14;

/// Lower bound on deg(G o H), never above the true degree.
///
/// G o H is restricted to a pseudo-random line a + t b and evaluated at
/// t = 0, 1, ..., deg G * deg H over the prime field F_p, p = 2^61 - 1. Since
/// the restriction has degree at most deg G * deg H, its forward differences
/// give its exact degree over F_p, which cannot exceed the degree over Q.
/// Returns nullopt when the probe does not apply: a coefficient denominator
/// divisible by p, or more than kMaxProbePoints points needed.
std::optional<int> composition_degree_lower_bound(const Endo& g, const Endo& h, std::uint64_t seed = 0x5eed);

}  // namespace polyaut
