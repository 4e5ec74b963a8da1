#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "supershape/error.hpp"
#include "supershape/perturb.hpp"
#include "supershape/shapegen.hpp"

using namespace supershape;

namespace {

PolarOutline circle(int n, double radius) {
  PolarOutline outline;
  for (int i = 0; i < n; ++i) {
    outline.angles.push_back(2 * std::numbers::pi * i / n);
    outline.radii.push_back(radius);
  }
  return outline;
}

}  // namespace

TEST_CASE("zero noise leaves the outline bit-identical") {
  const auto outline =
      sample_outline({1, 1, 6, 6, 0.2, 1.7, 1.7}, 360);
  const auto noisy = apply_radial_noise(outline, {0.0, 1234});
  CHECK(noisy.radii == outline.radii);
  CHECK(noisy.angles == outline.angles);
}

TEST_CASE("equal seeds reproduce, different seeds do not") {
  const auto outline = circle(360, 0.4);
  const NoiseSpec spec{0.05, 42};
  const auto first = apply_radial_noise(outline, spec);
  const auto second = apply_radial_noise(outline, spec);
  CHECK(first.radii == second.radii);

  const auto other = apply_radial_noise(outline, {0.05, 43});
  CHECK(first.radii != other.radii);
}

TEST_CASE("noise touches only radii") {
  const auto outline = circle(120, 0.4);
  const auto noisy = apply_radial_noise(outline, {0.10, 7});
  CHECK(noisy.angles == outline.angles);
  CHECK(noisy.radii.size() == outline.radii.size());
}

TEST_CASE("relative noise matches the requested standard deviation") {
  const int n = 10000;
  const auto outline = circle(n, 1.0);
  const auto noisy = apply_radial_noise(outline, {0.05, 2024});

  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double rel = noisy.radii[i] / outline.radii[i] - 1.0;
    sum += rel;
    sum_sq += rel * rel;
  }
  const double mean = sum / n;
  const double std_dev = std::sqrt(sum_sq / n - mean * mean);
  CHECK(std_dev == doctest::Approx(0.05).epsilon(0.04));  // 0.05 +/- 0.002
  CHECK(std::abs(std_dev - 0.05) <= 0.002);
  CHECK(std::abs(mean) <= 0.002);  // zero-mean multiplicative noise
}

TEST_CASE("expected radius is preserved across seeds") {
  const auto outline = circle(4, 0.5);
  double acc = 0.0;
  const int draws = 10000;
  for (int seed = 0; seed < draws; ++seed) {
    const auto noisy = apply_radial_noise(outline, {0.10, (std::uint64_t)seed});
    acc += noisy.radii[0];
  }
  CHECK(acc / draws == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("extreme noise clamps radii at the floor") {
  const auto outline = circle(360, 1e-5);
  const auto noisy = apply_radial_noise(outline, {50.0, 3});
  for (double r : noisy.radii) CHECK(r >= 1e-6);
}

TEST_CASE("noise spec validation") {
  const auto outline = circle(16, 0.4);
  CHECK_THROWS_AS(apply_radial_noise(outline, {-0.1, 0}),
                  InvalidParameterError);
}

TEST_CASE("perturb_params reproduces the modified table columns") {
  const SuperformulaParams tri{1, 1, 3, 3, 1500, 1500, 1500};
  ParamOverrides tri_mod;
  tri_mod.n1 = tri_mod.n2 = tri_mod.n3 = 1650.0;
  const auto near_tri = perturb_params(tri, tri_mod);
  CHECK(near_tri.n1 == 1650.0);
  CHECK(near_tri.n2 == 1650.0);
  CHECK(near_tri.n3 == 1650.0);
  CHECK(near_tri.m1 == 3.0);

  const SuperformulaParams blunt{1, 1, 6, 6, 60, 55, 10};
  ParamOverrides blunt_mod;
  blunt_mod.n1 = 66.0;
  blunt_mod.n2 = 60.5;
  blunt_mod.n3 = 11.0;
  const auto near_blunt = perturb_params(blunt, blunt_mod);
  CHECK(near_blunt.n1 == 66.0);
  CHECK(near_blunt.n2 == 60.5);
  CHECK(near_blunt.n3 == 11.0);

  const SuperformulaParams star{1, 1, 6, 6, 0.2, 1.7, 1.7};
  ParamOverrides star_mod;
  star_mod.n1 = 0.205;
  star_mod.n2 = star_mod.n3 = 1.71;
  const auto near_star = perturb_params(star, star_mod);
  CHECK(near_star.n1 == 0.205);
  CHECK(near_star.n2 == 1.71);
}

TEST_CASE("empty overrides are the identity, bad results are rejected") {
  const SuperformulaParams star{1, 1, 6, 6, 0.2, 1.7, 1.7};
  const auto same = perturb_params(star, {});
  CHECK(same.a == star.a);
  CHECK(same.n1 == star.n1);
  CHECK(same.n3 == star.n3);

  ParamOverrides bad;
  bad.n1 = -1.0;
  CHECK_THROWS_AS(perturb_params(star, bad), InvalidParameterError);
}
