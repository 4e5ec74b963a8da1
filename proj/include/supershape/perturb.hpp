#pragma once

#include <cstdint>
#include <optional>

#include "supershape/shapegen.hpp"

namespace supershape {

/// Seeded multiplicative radial noise: each radius is scaled by (1 + e) with
/// e drawn from a zero-mean normal of standard deviation `percent`.
struct NoiseSpec {
  double percent = 0.0;   ///< relative radial standard deviation, >= 0
  std::uint64_t seed = 0;
};

/// Applies the noise spec to an outline's radii, leaving angles untouched.
/// Radii are clamped below at 1e-6 map units. Fully deterministic: the draws
/// come from a mt19937_64 stream mapped through Box-Muller, so identical
/// (outline, spec) pairs give bit-identical results on every platform.
PolarOutline apply_radial_noise(const PolarOutline& outline,
                                const NoiseSpec& spec);

/// Field-wise replacement set for superformula parameters; unset fields keep
/// their base value.
struct ParamOverrides {
  std::optional<double> a, b, m1, m2, n1, n2, n3;
};

/// Applies overrides to a base parameter set and validates the result.
SuperformulaParams perturb_params(const SuperformulaParams& base,
                                  const ParamOverrides& overrides);

}  // namespace supershape
