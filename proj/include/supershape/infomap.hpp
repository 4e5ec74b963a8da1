#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "supershape/shapegen.hpp"

namespace supershape {

/// Geometry of the analysis map: an M x N cell grid over the unit square with
/// center (0.5, 0.5), scanned by A radial rays of length L. Each ray is split
/// into S = M sections of one resolution unit (L/M) each; obstruction
/// probabilities per section come from a normal with `sensor_sigma`.
struct GridSpec {
  int width = 64;            ///< M, cells across (also sections per ray)
  int height = 64;           ///< N, cells down
  int n_angles = 360;        ///< A, rays per full turn
  double sensor_sigma = 0.1; ///< sensor standard deviation, map units
  double ray_length = 1.0;   ///< L, map units

  /// Radius of the reference circle all raw information values assume,
  /// centered in the middle of the map.
  static constexpr double kBaselineRadius = std::numbers::sqrt2 / 2.0;

  int sections() const { return width; }
  double section_length() const { return ray_length / width; }
};

/// Throws InvalidParameterError on non-positive dimensions, sigma or length.
void validate(const GridSpec& spec);

/// Phi((x - mu) / sigma), accurate to better than 1e-12 absolute.
double normal_cdf(double x, double mu, double sigma);

/// Probability of an obstruction within each of the S ray sections, for a
/// normal centered at `mu_radius`: p_s = Phi(r_{s+1}) - Phi(r_s) over the
/// section boundaries r_s = s * L / S.
std::vector<double> ray_section_probabilities(double mu_radius,
                                              const GridSpec& spec);

/// Shannon source information p * log2(1/p) in bits; 0 at p = 0 and p = 1.
double shannon_information(double p);

/// Information content of each ray section under the baseline-circle
/// assumption. The baseline is a centered circle, so every ray shares this
/// one vector.
std::vector<double> baseline_information(const GridSpec& spec);

/// An M x N grid of non-negative information values (bits), stored row-major.
struct InfoMap {
  GridSpec spec;
  std::vector<double> values;  ///< spec.height * spec.width, row-major

  double at(int row, int col) const {
    return values[static_cast<size_t>(row) * spec.width + col];
  }
  double max_value() const;
};

/// Builds the per-shape projection map: baseline information per section
/// multiplied by the section probability of a normal centered on the outline
/// radius of that ray, rasterized onto the grid (section midpoints mapped to
/// cells, collisions keep the maximum, untouched cells stay 0). The outline
/// must have spec.n_angles samples and fit inside the map.
InfoMap shape_projection_map(const PolarOutline& outline, const GridSpec& spec);

/// Information gained by discovering `actual` when `assumed` was expected:
/// the sum over angles of the information of the probability mass that
/// `assumed`'s sensor distribution puts on the section containing the actual
/// radius. Smaller means more similar.
double shape_divergence(const PolarOutline& actual, const PolarOutline& assumed,
                        const GridSpec& spec);

/// Writes a 16-bit ASCII PGM (P2) with values scaled by 65535/max and a
/// `# scale=<max>` comment so the float map is recoverable to quantization
/// precision.
void write_pgm(const InfoMap& map, const std::string& path);

/// Reads a PGM written by write_pgm back into float values.
InfoMap read_pgm(const std::string& path);

}  // namespace supershape
