#pragma once

#include <string>
#include <vector>

namespace supershape {

/// The seven coefficients of the superformula radius function
/// r(theta) = (|cos(m1*theta/4)/a|^n2 + |sin(m2*theta/4)/b|^n3)^(-1/n1).
struct SuperformulaParams {
  double a = 1.0;   ///< cosine-term denominator, > 0
  double b = 1.0;   ///< sine-term denominator, > 0
  double m1 = 0.0;  ///< cosine angular frequency, >= 0
  double m2 = 0.0;  ///< sine angular frequency, >= 0
  double n1 = 1.0;  ///< outer exponent, > 0
  double n2 = 1.0;  ///< cosine exponent
  double n3 = 1.0;  ///< sine exponent
};

/// Throws InvalidParameterError unless all fields are finite, a > 0, b > 0,
/// n1 > 0 and m1, m2 >= 0.
void validate(const SuperformulaParams& params);

/// Evaluates the superformula radius at `theta`. If the base sum underflows to
/// exactly zero (possible at isolated angles when m1 != m2, and for very large
/// exponents) the radius is clamped to `zero_base_clamp`, the configured ray
/// length. The result is always finite and positive.
double superformula_radius(const SuperformulaParams& params, double theta,
                           double zero_base_clamp = 1.0);

/// A closed contour sampled on the canonical uniform angle grid
/// theta_i = 2*pi*i/n, i = 0..n-1.
struct PolarOutline {
  std::vector<double> angles;  ///< radians, uniform over [0, 2*pi)
  std::vector<double> radii;   ///< map units, finite and > 0
  std::string label;
};

/// Throws unless the outline has >= 3 samples on the canonical angle grid
/// (within 1e-9) with finite positive radii.
void validate(const PolarOutline& outline);

/// Angle spacing 2*pi/n of a valid outline.
double angular_step(const PolarOutline& outline);

/// Samples the superformula on `n_angles` uniform angles. A positive
/// `rotation` shifts the contour counter-clockwise: r_i = r(theta_i - rotation).
PolarOutline sample_outline(const SuperformulaParams& params, int n_angles,
                            double rotation = 0.0);

/// Rescales all radii so the largest equals `target_max_radius`.
PolarOutline normalize_outline(const PolarOutline& outline,
                               double target_max_radius);

/// Rotates the contour counter-clockwise by `angle` via circular resampling of
/// the radii. Angles that are exact multiples of the angular step reduce to an
/// index rotation; otherwise radii are linearly interpolated in theta.
PolarOutline rotate_outline(const PolarOutline& outline, double angle);

/// Rotational symmetry fold of the sampled contour: m when m1 == m2 == m
/// (integer) with a == b and n2 == n3, m/2 for even m when the exponents
/// differ (the cos/sin terms swap under a 2*pi/m turn), otherwise 1.
int symmetry_fold(const SuperformulaParams& params);

/// One record of a shape library: a named parameter set with an interest value.
struct LibraryShape {
  std::string name;
  SuperformulaParams params;
  double interest = 0.0;
};

/// Reads a shape library CSV with header `name,a,b,m1,m2,n1,n2,n3,interest`.
/// Throws ParseError (with line number) on malformed content, IoError if the
/// file cannot be opened.
std::vector<LibraryShape> load_shape_library(const std::string& path);

/// Writes the shape library CSV format read by load_shape_library.
void save_shape_library(const std::vector<LibraryShape>& shapes,
                        const std::string& path);

/// Reads an outline CSV with header `theta_rad,radius`.
PolarOutline load_outline_csv(const std::string& path);

/// Writes an outline CSV with header `theta_rad,radius`.
void save_outline_csv(const PolarOutline& outline, const std::string& path);

}  // namespace supershape
