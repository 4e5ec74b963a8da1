#include "supershape/infomap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "supershape/error.hpp"
#include "text_io.hpp"

namespace supershape {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.n_angles < 1)
    throw InvalidParameterError("grid dimensions and ray count must be >= 1");
  if (!(spec.sensor_sigma > 0.0) || !std::isfinite(spec.sensor_sigma))
    throw InvalidParameterError("sensor sigma must be positive");
  if (!(spec.ray_length > 0.0) || !std::isfinite(spec.ray_length))
    throw InvalidParameterError("ray length must be positive");
}

double normal_cdf(double x, double mu, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw InvalidParameterError("normal_cdf requires sigma > 0");
  return 0.5 * std::erfc(-(x - mu) / sigma * kInvSqrt2);
}

std::vector<double> ray_section_probabilities(double mu_radius,
                                              const GridSpec& spec) {
  validate(spec);
  if (!std::isfinite(mu_radius))
    throw InvalidParameterError("ray center radius not finite");
  const int s = spec.sections();
  const double len = spec.section_length();
  std::vector<double> probs(s);
  double cdf_lo = normal_cdf(0.0, mu_radius, spec.sensor_sigma);
  for (int i = 0; i < s; ++i) {
    const double hi = (i + 1 == s) ? spec.ray_length : (i + 1) * len;
    const double cdf_hi = normal_cdf(hi, mu_radius, spec.sensor_sigma);
    probs[i] = std::max(0.0, cdf_hi - cdf_lo);
    cdf_lo = cdf_hi;
  }
  return probs;
}

double shannon_information(double p) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw InvalidParameterError("probability outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return p * std::log2(1.0 / p);
}

std::vector<double> baseline_information(const GridSpec& spec) {
  auto probs = ray_section_probabilities(GridSpec::kBaselineRadius, spec);
  std::vector<double> info(probs.size());
  for (size_t i = 0; i < probs.size(); ++i)
    info[i] = shannon_information(probs[i]);
  return info;
}

double InfoMap::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

InfoMap shape_projection_map(const PolarOutline& outline,
                             const GridSpec& spec) {
  validate(spec);
  validate(outline);
  if (static_cast<int>(outline.angles.size()) != spec.n_angles)
    throw DimensionError("outline sample count does not match ray count");

  const int s = spec.sections();
  const double len = spec.section_length();
  const auto base_info = baseline_information(spec);

  InfoMap map;
  map.spec = spec;
  map.values.assign(static_cast<size_t>(spec.width) * spec.height, 0.0);

  for (int a = 0; a < spec.n_angles; ++a) {
    const double theta = outline.angles[a];
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const auto q = ray_section_probabilities(outline.radii[a], spec);
    for (int i = 0; i < s; ++i) {
      const double value = base_info[i] * q[i];
      const double mid = (i + 0.5) * len;
      const double x = 0.5 + mid * cos_t;
      const double y = 0.5 + mid * sin_t;
      const int col = static_cast<int>(std::floor(x * spec.width));
      const int row = static_cast<int>(std::floor(y * spec.height));
      if (col < 0 || col >= spec.width || row < 0 || row >= spec.height)
        continue;  // midpoint fell off the map
      double& cell = map.values[static_cast<size_t>(row) * spec.width + col];
      cell = std::max(cell, value);
    }
  }
  return map;
}

double shape_divergence(const PolarOutline& actual, const PolarOutline& assumed,
                        const GridSpec& spec) {
  validate(spec);
  validate(actual);
  validate(assumed);
  if (actual.angles.size() != assumed.angles.size())
    throw DimensionError("outlines have different sample counts");

  const int s = spec.sections();
  const double len = spec.section_length();
  double total = 0.0;
  for (size_t a = 0; a < actual.angles.size(); ++a) {
    int section = static_cast<int>(std::floor(actual.radii[a] / len));
    section = std::clamp(section, 0, s - 1);
    const double lo = section * len;
    const double hi = (section + 1 == s) ? spec.ray_length : (section + 1) * len;
    const double p =
        std::max(0.0, normal_cdf(hi, assumed.radii[a], spec.sensor_sigma) -
                          normal_cdf(lo, assumed.radii[a], spec.sensor_sigma));
    total += shannon_information(std::min(p, 1.0));
  }
  return total;
}

void write_pgm(const InfoMap& map, const std::string& path) {
  validate(map.spec);
  if (map.values.size() !=
      static_cast<size_t>(map.spec.width) * map.spec.height)
    throw DimensionError("map value count does not match its grid");
  const double max = map.max_value();
  const double scale = (max > 0.0) ? 65535.0 / max : 0.0;

  auto out = detail::open_output(path);
  out << "P2\n";
  out << "# scale=" << detail::fmt(max) << "\n";
  out << map.spec.width << ' ' << map.spec.height << "\n65535\n";
  for (int row = 0; row < map.spec.height; ++row) {
    for (int col = 0; col < map.spec.width; ++col) {
      const long pixel =
          std::lround(map.at(row, col) * scale);
      out << pixel << (col + 1 == map.spec.width ? '\n' : ' ');
    }
  }
  if (!out) throw IoError("failed writing " + path);
}

InfoMap read_pgm(const std::string& path) {
  auto in = detail::open_input(path);
  std::string magic;
  if (!(in >> magic) || magic != "P2")
    throw ParseError(path + ": not an ASCII PGM (P2)");
  in >> std::ws;
  double max = 0.0;
  bool have_scale = false;
  while (in.peek() == '#') {
    std::string comment;
    std::getline(in, comment);
    const std::string key = "# scale=";
    if (comment.rfind(key, 0) == 0) {
      max = detail::parse_double(comment.substr(key.size()), path, 0);
      have_scale = true;
    }
    in >> std::ws;
  }
  if (!have_scale) throw ParseError(path + ": missing '# scale=' comment");
  int width = 0, height = 0, maxval = 0;
  if (!(in >> width >> height >> maxval) || width < 1 || height < 1 ||
      maxval != 65535)
    throw ParseError(path + ": malformed PGM header");

  InfoMap map;
  map.spec.width = width;
  map.spec.height = height;
  map.values.resize(static_cast<size_t>(width) * height);
  const double scale = (max > 0.0) ? max / 65535.0 : 0.0;
  for (auto& v : map.values) {
    long pixel = 0;
    if (!(in >> pixel) || pixel < 0 || pixel > 65535)
      throw ParseError(path + ": malformed pixel data");
    v = pixel * scale;
  }
  return map;
}

}  // namespace supershape
