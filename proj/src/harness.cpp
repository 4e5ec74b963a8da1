#include "supershape/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>

#include "supershape/error.hpp"
#include "supershape/perturb.hpp"
#include "text_io.hpp"

namespace supershape {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

const LibraryShape* find_shape(const TrainedLibrary& lib,
                               const std::string& name) {
  for (const auto& s : lib.shapes)
    if (s.name == name) return &s;
  return nullptr;
}

const LibraryShape& require_shape(const TrainedLibrary& lib,
                                  const std::string& name) {
  const auto* s = find_shape(lib, name);
  if (!s) throw LookupError("library has no shape named '" + name + "'");
  return *s;
}

}  // namespace

void finalize(ExperimentConfig& config) {
  validate(config.grid);
  if (config.trials < 1) throw InvalidParameterError("trials must be >= 1");
  if (!(config.normalize_radius > 0.0))
    throw InvalidParameterError("normalize radius must be positive");
  if (config.noise_percents.empty())
    for (int i = 0; i <= 20; ++i)
      config.noise_percents.push_back(i / 100.0);
  if (config.rotation_angles_deg.empty())
    for (int deg = 0; deg <= 360; ++deg)
      config.rotation_angles_deg.push_back(deg);
  if (config.m_step <= 0.0 || config.m_half_width < 0.0 ||
      config.n1_steps < 1 || config.n23_steps < 1)
    throw InvalidParameterError("parameter sweep ranges are empty");
}

std::vector<LibraryShape> paper_base_library() {
  return {
      {"rounded_triangle", {1.0, 1.0, 3.0, 3.0, 1500.0, 1500.0, 1500.0}, 10.0},
      {"three_faced_blunt", {1.0, 1.0, 6.0, 6.0, 60.0, 55.0, 10.0}, 8.0},
      {"six_pointed_star", {1.0, 1.0, 6.0, 6.0, 0.2, 1.7, 1.7}, 6.0},
  };
}

std::vector<LibraryShape> paper_near_variants() {
  const auto base = paper_base_library();
  ParamOverrides tri;
  tri.n1 = tri.n2 = tri.n3 = 1650.0;
  ParamOverrides blunt;
  blunt.n1 = 66.0;
  blunt.n2 = 60.5;
  blunt.n3 = 11.0;
  ParamOverrides star;
  star.n1 = 0.205;
  star.n2 = star.n3 = 1.71;
  return {
      {"near_rounded_triangle", perturb_params(base[0].params, tri), 0.0},
      {"near_three_faced_blunt", perturb_params(base[1].params, blunt), 0.0},
      {"near_six_pointed_star", perturb_params(base[2].params, star), 0.0},
  };
}

std::string expected_base_name(const std::string& near_name) {
  const std::string prefix = "near_";
  if (near_name.rfind(prefix, 0) == 0) return near_name.substr(prefix.size());
  return near_name;
}

InfoMap build_shape_map(const SuperformulaParams& params, const GridSpec& grid,
                        double normalize_radius, double rotation) {
  const auto outline = normalize_outline(
      sample_outline(params, grid.n_angles, rotation), normalize_radius);
  return shape_projection_map(outline, grid);
}

TrainedLibrary build_library(const std::vector<LibraryShape>& shapes,
                             const GridSpec& grid, double normalize_radius) {
  TrainedLibrary lib;
  lib.shapes = shapes;
  std::vector<std::string> names;
  std::vector<double> interests;
  for (const auto& s : shapes) {
    auto outline =
        normalize_outline(sample_outline(s.params, grid.n_angles), normalize_radius);
    outline.label = s.name;
    lib.maps.push_back(shape_projection_map(outline, grid));
    lib.outlines.push_back(std::move(outline));
    names.push_back(s.name);
    interests.push_back(s.interest);
  }
  lib.model = train(lib.maps, names, interests);
  return lib;
}

std::vector<IdealRow> run_ideal(const TrainedLibrary& lib,
                                const ExperimentConfig& config) {
  std::vector<IdealRow> rows;
  for (size_t i = 0; i < lib.shapes.size(); ++i) {
    const auto result =
        classify(lib.model, lib.maps[i], config.gamma, config.theta_cutoff);
    IdealRow row;
    row.shape = lib.shapes[i].name;
    row.mscore = result.mscore;
    row.min_weight = result.nearest_weight;
    row.mean_weight = result.mean_weight;
    row.nearest = result.nearest;
    row.correct = (result.nearest == lib.shapes[i].name) && result.accepted;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<NearRow> run_near(const TrainedLibrary& lib,
                              const ExperimentConfig& config,
                              std::vector<LibraryShape> variants) {
  if (variants.empty()) variants = paper_near_variants();
  std::vector<NearRow> rows;
  for (const auto& variant : variants) {
    const auto map = build_shape_map(variant.params, config.grid,
                                     config.normalize_radius);
    const auto result = classify(lib.model, map, config.gamma, config.theta_cutoff);
    NearRow row;
    row.shape = variant.name;
    row.mscore = result.mscore;
    row.out_weight = result.nearest_weight;
    row.mean_weight = result.mean_weight;
    row.nearest = result.nearest;
    double other = std::numeric_limits<double>::infinity();
    for (int k = 0; k < static_cast<int>(result.out_weights.size()); ++k)
      if (k != result.nearest_index)
        other = std::min(other, result.out_weights[k]);
    row.nearest_other_weight = other;
    row.correct = (result.nearest == expected_base_name(variant.name)) &&
                  result.accepted;
    rows.push_back(std::move(row));
  }
  return rows;
}

NoiseSweep sweep_noise(const TrainedLibrary& lib,
                       const ExperimentConfig& config) {
  const auto& shape = require_shape(lib, config.noise_shape);
  size_t shape_index = 0;
  for (size_t i = 0; i < lib.shapes.size(); ++i)
    if (lib.shapes[i].name == shape.name) shape_index = i;
  const auto& outline = lib.outlines[shape_index];

  NoiseSweep sweep;
  std::uint64_t trial_counter = 0;
  for (double pct : config.noise_percents) {
    double sum = 0.0, sum_sq = 0.0;
    int correct = 0;
    for (int t = 0; t < config.trials; ++t, ++trial_counter) {
      NoiseSpec noise{pct, config.base_seed + trial_counter};
      const auto noisy = apply_radial_noise(outline, noise);
      const auto map = shape_projection_map(noisy, config.grid);
      const auto result =
          classify(lib.model, map, config.gamma, config.theta_cutoff);
      const bool ok = (result.nearest == shape.name) && result.accepted;
      sweep.trials.push_back({pct, t, result.mscore, ok});
      sum += result.mscore;
      sum_sq += result.mscore * result.mscore;
      correct += ok ? 1 : 0;
    }
    const double n = config.trials;
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    sweep.summary.push_back({pct, mean, std::sqrt(var), correct / n});
  }
  return sweep;
}

std::vector<RotationRow> sweep_rotation(const TrainedLibrary& lib,
                                        const ExperimentConfig& config) {
  std::vector<RotationRow> rows;
  for (size_t i = 0; i < lib.shapes.size(); ++i) {
    for (double deg : config.rotation_angles_deg) {
      const auto rotated = rotate_outline(lib.outlines[i], deg * kDegToRad);
      const auto map = shape_projection_map(rotated, config.grid);
      const auto result =
          classify(lib.model, map, config.gamma, config.theta_cutoff);
      rows.push_back({lib.shapes[i].name, deg, result.mscore});
    }
  }
  return rows;
}

std::vector<ParamRow> sweep_param(const TrainedLibrary& lib,
                                  const ExperimentConfig& config,
                                  ParamSweepKind kind) {
  std::string shape_name, param_name;
  std::vector<double> values;
  switch (kind) {
    case ParamSweepKind::M: {
      shape_name = config.m_sweep_shape;
      param_name = "m";
      const double base = require_shape(lib, shape_name).params.m1;
      const int steps = static_cast<int>(
          std::llround(config.m_half_width / config.m_step));
      for (int i = -steps; i <= steps; ++i)
        values.push_back(base + i * config.m_step);
      break;
    }
    case ParamSweepKind::N1: {
      shape_name = config.n1_sweep_shape;
      param_name = "n1";
      const double base = require_shape(lib, shape_name).params.n1;
      const int n = config.n1_steps;
      for (int i = 0; i < n; ++i) {
        const double f = (n == 1) ? 0.0 : (2.0 * i / (n - 1) - 1.0);
        values.push_back(base * (1.0 + config.n1_rel_width * f));
      }
      break;
    }
    case ParamSweepKind::N23: {
      shape_name = config.n23_sweep_shape;
      param_name = "n23";
      const double base = require_shape(lib, shape_name).params.n2;
      const int n = config.n23_steps;
      for (int i = 0; i < n; ++i) {
        const double f = (n == 1) ? 0.0 : (2.0 * i / (n - 1) - 1.0);
        values.push_back(base * (1.0 + config.n23_rel_width * f));
      }
      break;
    }
  }

  const auto& shape = require_shape(lib, shape_name);
  std::vector<ParamRow> rows;
  for (double value : values) {
    ParamOverrides overrides;
    if (kind == ParamSweepKind::M) {
      overrides.m1 = overrides.m2 = value;
    } else if (kind == ParamSweepKind::N1) {
      overrides.n1 = value;
    } else {
      overrides.n2 = overrides.n3 = value;
    }
    const auto params = perturb_params(shape.params, overrides);
    const auto map =
        build_shape_map(params, config.grid, config.normalize_radius);
    const auto result =
        classify(lib.model, map, config.gamma, config.theta_cutoff);
    rows.push_back({shape.name, param_name, value, result.mscore});
  }
  return rows;
}

std::vector<std::string> render_maps(const TrainedLibrary& lib,
                                     const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(config.output_dir) / "maps";
  fs::create_directories(dir);
  std::vector<std::string> paths;
  for (size_t i = 0; i < lib.shapes.size(); ++i) {
    const auto path = (dir / (lib.shapes[i].name + ".pgm")).string();
    write_pgm(lib.maps[i], path);
    paths.push_back(path);
  }
  return paths;
}

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_ideal_csv(const std::vector<IdealRow>& rows,
                     const std::string& path) {
  auto out = detail::open_output(path);
  out << "shape,mscore,min_weight,mean_weight,nearest,correct\n";
  for (const auto& r : rows)
    out << r.shape << ',' << detail::fmt(r.mscore) << ','
        << detail::fmt(r.min_weight) << ',' << detail::fmt(r.mean_weight) << ','
        << r.nearest << ',' << bool_text(r.correct) << '\n';
}

void write_near_csv(const std::vector<NearRow>& rows, const std::string& path) {
  auto out = detail::open_output(path);
  out << "shape,mscore,out_weight,nearest_other_weight,mean_weight,nearest,"
         "correct\n";
  for (const auto& r : rows)
    out << r.shape << ',' << detail::fmt(r.mscore) << ','
        << detail::fmt(r.out_weight) << ','
        << detail::fmt(r.nearest_other_weight) << ','
        << detail::fmt(r.mean_weight) << ',' << r.nearest << ','
        << bool_text(r.correct) << '\n';
}

void write_noise_csv(const NoiseSweep& sweep, const std::string& trials_path,
                     const std::string& summary_path) {
  {
    auto out = detail::open_output(trials_path);
    out << "noise_pct,trial,mscore,correct\n";
    for (const auto& r : sweep.trials)
      out << detail::fmt(r.noise_pct) << ',' << r.trial << ','
          << detail::fmt(r.mscore) << ',' << bool_text(r.correct) << '\n';
  }
  auto out = detail::open_output(summary_path);
  out << "noise_pct,mean_mscore,std_mscore,correct_rate\n";
  for (const auto& r : sweep.summary)
    out << detail::fmt(r.noise_pct) << ',' << detail::fmt(r.mean_mscore) << ','
        << detail::fmt(r.std_mscore) << ',' << detail::fmt(r.correct_rate)
        << '\n';
}

void write_rotation_csv(const std::vector<RotationRow>& rows,
                        const std::string& path) {
  auto out = detail::open_output(path);
  out << "shape,angle_deg,mscore\n";
  for (const auto& r : rows)
    out << r.shape << ',' << detail::fmt(r.angle_deg) << ','
        << detail::fmt(r.mscore) << '\n';
}

void write_param_csv(const std::vector<ParamRow>& rows,
                     const std::string& path) {
  auto out = detail::open_output(path);
  out << "shape,param,value,mscore\n";
  for (const auto& r : rows)
    out << r.shape << ',' << r.param << ',' << detail::fmt(r.value) << ','
        << detail::fmt(r.mscore) << '\n';
}

}  // namespace supershape
