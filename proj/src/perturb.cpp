#include "supershape/perturb.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "supershape/error.hpp"

namespace supershape {

namespace {

constexpr double kRadiusFloor = 1e-6;

// Standard-normal draw built only from the fully specified mt19937_64
// stream: two 53-bit uniforms through the Box-Muller transform. The library
// normal_distribution is implementation-defined, which would break the
// bit-identical reproducibility contract across standard libraries.
class NormalDraw {
 public:
  explicit NormalDraw(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  // in [0, 1)
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  // in (0, 1]
  double uniform_open() { return ((engine_() >> 11) + 1.0) * 0x1.0p-53; }

  std::mt19937_64 engine_;
};

}  // namespace

PolarOutline apply_radial_noise(const PolarOutline& outline,
                                const NoiseSpec& spec) {
  validate(outline);
  if (!(spec.percent >= 0.0) || !std::isfinite(spec.percent))
    throw InvalidParameterError("noise percent must be finite and >= 0");

  NormalDraw draw(spec.seed);
  PolarOutline out = outline;
  for (double& r : out.radii) {
    const double factor = 1.0 + spec.percent * draw();
    r = std::max(r * factor, kRadiusFloor);
  }
  return out;
}

SuperformulaParams perturb_params(const SuperformulaParams& base,
                                  const ParamOverrides& overrides) {
  SuperformulaParams p = base;
  if (overrides.a) p.a = *overrides.a;
  if (overrides.b) p.b = *overrides.b;
  if (overrides.m1) p.m1 = *overrides.m1;
  if (overrides.m2) p.m2 = *overrides.m2;
  if (overrides.n1) p.n1 = *overrides.n1;
  if (overrides.n2) p.n2 = *overrides.n2;
  if (overrides.n3) p.n3 = *overrides.n3;
  validate(p);
  return p;
}

}  // namespace supershape
