#include "supershape/shapegen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "supershape/error.hpp"
#include "text_io.hpp"

namespace supershape {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Radii can legitimately collapse toward zero for params outside the tested
// families (negative n2/n3 with a vanishing base term); keep them positive.
constexpr double kMinRadius = 1e-12;

constexpr double kGridTol = 1e-9;

}  // namespace

void validate(const SuperformulaParams& p) {
  const double fields[] = {p.a, p.b, p.m1, p.m2, p.n1, p.n2, p.n3};
  for (double f : fields) {
    if (!std::isfinite(f))
      throw InvalidParameterError("superformula parameter not finite");
  }
  if (p.a <= 0.0 || p.b <= 0.0)
    throw InvalidParameterError("superformula requires a > 0 and b > 0");
  if (p.n1 <= 0.0) throw InvalidParameterError("superformula requires n1 > 0");
  if (p.m1 < 0.0 || p.m2 < 0.0)
    throw InvalidParameterError("superformula requires m1, m2 >= 0");
}

double superformula_radius(const SuperformulaParams& p, double theta,
                           double zero_base_clamp) {
  validate(p);
  if (!std::isfinite(theta))
    throw InvalidParameterError("superformula angle not finite");
  const double t1 = std::pow(std::abs(std::cos(p.m1 * theta / 4.0) / p.a), p.n2);
  const double t2 = std::pow(std::abs(std::sin(p.m2 * theta / 4.0) / p.b), p.n3);
  const double base = t1 + t2;
  double r = (base == 0.0) ? zero_base_clamp : std::pow(base, -1.0 / p.n1);
  if (!std::isfinite(r)) r = zero_base_clamp;
  return std::max(r, kMinRadius);
}

void validate(const PolarOutline& outline) {
  const size_t n = outline.angles.size();
  if (n != outline.radii.size())
    throw DimensionError("outline angle and radius counts differ");
  if (n < 3) throw InvalidParameterError("outline needs at least 3 samples");
  const double step = kTwoPi / static_cast<double>(n);
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(outline.angles[i] - step * static_cast<double>(i)) > kGridTol)
      throw InvalidParameterError(
          "outline angles must lie on the uniform grid 2*pi*i/n");
    const double r = outline.radii[i];
    if (!std::isfinite(r) || r <= 0.0)
      throw InvalidParameterError("outline radii must be finite and positive");
  }
}

double angular_step(const PolarOutline& outline) {
  return kTwoPi / static_cast<double>(outline.angles.size());
}

PolarOutline sample_outline(const SuperformulaParams& params, int n_angles,
                            double rotation) {
  validate(params);
  if (n_angles < 3)
    throw InvalidParameterError("sample_outline needs n_angles >= 3");
  PolarOutline out;
  out.angles.resize(n_angles);
  out.radii.resize(n_angles);
  for (int i = 0; i < n_angles; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / n_angles;
    out.angles[i] = theta;
    out.radii[i] = superformula_radius(params, theta - rotation);
  }
  return out;
}

PolarOutline normalize_outline(const PolarOutline& outline,
                               double target_max_radius) {
  if (!(target_max_radius > 0.0) || !std::isfinite(target_max_radius))
    throw InvalidParameterError("normalize target radius must be positive");
  if (outline.radii.empty())
    throw DegenerateOutlineError("cannot normalize an empty outline");
  const double max_r =
      *std::max_element(outline.radii.begin(), outline.radii.end());
  if (!(max_r > 0.0))
    throw DegenerateOutlineError("cannot normalize an all-zero outline");
  validate(outline);
  PolarOutline out = outline;
  const double scale = target_max_radius / max_r;
  for (double& r : out.radii) r *= scale;
  return out;
}

PolarOutline rotate_outline(const PolarOutline& outline, double angle) {
  validate(outline);
  const int n = static_cast<int>(outline.radii.size());
  const double step = kTwoPi / static_cast<double>(n);

  double offset = std::fmod(angle / step, static_cast<double>(n));
  if (offset < 0.0) offset += n;
  // Snap to an index rotation when the angle is an exact multiple of the step.
  const double rounded = std::round(offset);
  if (std::abs(offset - rounded) < 1e-9)
    offset = (rounded >= n) ? 0.0 : rounded;

  PolarOutline out = outline;
  for (int i = 0; i < n; ++i) {
    double src = std::fmod(static_cast<double>(i) - offset, static_cast<double>(n));
    if (src < 0.0) src += n;
    const int i0 = static_cast<int>(src) % n;
    const double frac = src - std::floor(src);
    if (frac == 0.0) {
      out.radii[i] = outline.radii[i0];
    } else {
      const int i1 = (i0 + 1) % n;
      out.radii[i] = (1.0 - frac) * outline.radii[i0] + frac * outline.radii[i1];
    }
  }
  return out;
}

int symmetry_fold(const SuperformulaParams& params) {
  if (params.m1 != params.m2) return 1;
  const double m = params.m1;
  if (m < 1.0 || m != std::floor(m)) return 1;
  const int mi = static_cast<int>(m);
  if (params.a == params.b && params.n2 == params.n3) return mi;
  // A 2*pi/m turn swaps the cos and sin terms; only a half turn of the
  // argument restores them when the exponents differ.
  return (mi % 2 == 0) ? mi / 2 : 1;
}

namespace {

const char* const kLibraryHeader[] = {"name", "a",  "b",  "m1", "m2",
                                      "n1",   "n2", "n3", "interest"};
constexpr int kLibraryColumns = 9;

}  // namespace

std::vector<LibraryShape> load_shape_library(const std::string& path) {
  auto in = detail::open_input(path);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line))
    throw ParseError(path + ": empty library file");
  ++line_no;
  auto header = detail::split_csv(line);
  if (header.size() != kLibraryColumns)
    throw ParseError(path + ":1: expected " + std::to_string(kLibraryColumns) +
                     " columns, got " + std::to_string(header.size()));
  for (int c = 0; c < kLibraryColumns; ++c) {
    if (header[c] != kLibraryHeader[c])
      throw ParseError(path + ":1: unknown column '" + header[c] +
                       "' (expected '" + kLibraryHeader[c] + "')");
  }

  std::vector<LibraryShape> shapes;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto f = detail::split_csv(line);
    if (f.size() != kLibraryColumns)
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(kLibraryColumns) + " fields, got " +
                       std::to_string(f.size()));
    LibraryShape s;
    s.name = f[0];
    if (s.name.empty())
      throw ParseError(path + ":" + std::to_string(line_no) + ": empty name");
    s.params.a = detail::parse_double(f[1], path, line_no);
    s.params.b = detail::parse_double(f[2], path, line_no);
    s.params.m1 = detail::parse_double(f[3], path, line_no);
    s.params.m2 = detail::parse_double(f[4], path, line_no);
    s.params.n1 = detail::parse_double(f[5], path, line_no);
    s.params.n2 = detail::parse_double(f[6], path, line_no);
    s.params.n3 = detail::parse_double(f[7], path, line_no);
    s.interest = detail::parse_double(f[8], path, line_no);
    if (s.interest < 0.0)
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": interest must be non-negative");
    try {
      validate(s.params);
    } catch (const InvalidParameterError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    shapes.push_back(std::move(s));
  }
  if (shapes.empty()) throw ParseError(path + ": library has no shapes");
  return shapes;
}

void save_shape_library(const std::vector<LibraryShape>& shapes,
                        const std::string& path) {
  auto out = detail::open_output(path);
  out << "name,a,b,m1,m2,n1,n2,n3,interest\n";
  for (const auto& s : shapes) {
    out << s.name << ',' << detail::fmt(s.params.a) << ','
        << detail::fmt(s.params.b) << ',' << detail::fmt(s.params.m1) << ','
        << detail::fmt(s.params.m2) << ',' << detail::fmt(s.params.n1) << ','
        << detail::fmt(s.params.n2) << ',' << detail::fmt(s.params.n3) << ','
        << detail::fmt(s.interest) << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

PolarOutline load_outline_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty outline file");
  auto header = detail::split_csv(line);
  if (header.size() != 2 || header[0] != "theta_rad" || header[1] != "radius")
    throw ParseError(path + ":1: expected header 'theta_rad,radius'");

  PolarOutline outline;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto f = detail::split_csv(line);
    if (f.size() != 2)
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 2 fields");
    outline.angles.push_back(detail::parse_double(f[0], path, line_no));
    outline.radii.push_back(detail::parse_double(f[1], path, line_no));
  }
  try {
    validate(outline);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return outline;
}

void save_outline_csv(const PolarOutline& outline, const std::string& path) {
  auto out = detail::open_output(path);
  out << "theta_rad,radius\n";
  for (size_t i = 0; i < outline.angles.size(); ++i)
    out << detail::fmt(outline.angles[i]) << ','
        << detail::fmt(outline.radii[i]) << '\n';
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace supershape
