// supershape: generate superformula shape libraries, build information maps,
// train the eigenface model and classify outlines against it.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supershape/eigenmodel.hpp"
#include "supershape/error.hpp"
#include "supershape/harness.hpp"
#include "supershape/infomap.hpp"
#include "supershape/matcher.hpp"
#include "supershape/perturb.hpp"
#include "supershape/shapegen.hpp"

namespace {

namespace fs = std::filesystem;
using namespace supershape;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitRejected = 3;

struct Options {
  int grid = 64;
  int angles = 360;
  double sigma = 0.1;
  double radius = 0.45;
  double gamma = 0.85;
  double cutoff = 1e-2;
  std::uint64_t seed = 0;
  int trials = 30;
  std::string library_path;
  std::string model_path;
  std::string outline_path;
  std::string report_path;
  std::string out_dir = "out";
  std::string sweep_kind;
  bool rotate_sweep = false;
};

GridSpec make_grid(const Options& opt) {
  GridSpec grid;
  grid.width = opt.grid;
  grid.height = opt.grid;
  grid.n_angles = opt.angles;
  grid.sensor_sigma = opt.sigma;
  validate(grid);
  return grid;
}

ExperimentConfig make_config(const Options& opt) {
  ExperimentConfig config;
  config.grid = make_grid(opt);
  config.normalize_radius = opt.radius;
  config.gamma = opt.gamma;
  config.theta_cutoff = opt.cutoff;
  config.trials = opt.trials;
  config.base_seed = opt.seed;
  config.output_dir = opt.out_dir;
  finalize(config);
  return config;
}

int cmd_gen(const Options& opt) {
  const auto shapes = load_shape_library(opt.library_path);
  const auto grid = make_grid(opt);
  fs::create_directories(opt.out_dir);
  for (const auto& shape : shapes) {
    auto outline = normalize_outline(sample_outline(shape.params, grid.n_angles),
                                     opt.radius);
    outline.label = shape.name;
    const fs::path base = fs::path(opt.out_dir) / shape.name;
    save_outline_csv(outline, base.string() + "_outline.csv");
    write_pgm(shape_projection_map(outline, grid), base.string() + ".pgm");
  }
  std::cout << "wrote " << shapes.size() << " outlines and maps to "
            << opt.out_dir << "\n";
  return kExitOk;
}

int cmd_train(const Options& opt) {
  const auto shapes = load_shape_library(opt.library_path);
  const auto lib = build_library(shapes, make_grid(opt), opt.radius);
  save_model(lib.model, opt.model_path);
  std::cout << "trained " << lib.model.face_count() << " eigenfaces over "
            << lib.model.class_count() << " classes -> " << opt.model_path
            << "\n";
  return kExitOk;
}

int cmd_match(const Options& opt) {
  const auto model = load_model(opt.model_path);
  const auto grid = make_grid(opt);
  if (model.width != grid.width || model.height != grid.height)
    throw ConfigError("model grid " + std::to_string(model.width) + "x" +
                      std::to_string(model.height) +
                      " does not match requested grid");

  auto outline = load_outline_csv(opt.outline_path);
  if (static_cast<int>(outline.angles.size()) != grid.n_angles)
    throw ConfigError("outline has " + std::to_string(outline.angles.size()) +
                      " samples but the grid expects " +
                      std::to_string(grid.n_angles));
  outline = normalize_outline(outline, opt.radius);

  MatchResult result;
  if (opt.rotate_sweep) {
    std::vector<double> angles;
    for (int deg = 0; deg < 360; ++deg)
      angles.push_back(deg * std::numbers::pi / 180.0);
    result = rotation_sweep_classify(model, outline, grid, angles, opt.gamma,
                                     opt.cutoff)
                 .first;
  } else {
    result = classify(model, shape_projection_map(outline, grid), opt.gamma,
                      opt.cutoff);
  }

  const double interest = interest_value(result, model);
  const std::string query = fs::path(opt.outline_path).stem().string();
  if (!opt.report_path.empty())
    append_match_report(opt.report_path, query, result, interest);

  std::cout << query << ": nearest=" << result.nearest
            << " mscore=" << result.mscore
            << " weight=" << result.nearest_weight
            << " rotation_deg=" << result.rotation * 180.0 / std::numbers::pi
            << " accepted=" << (result.accepted ? "yes" : "no")
            << " interest=" << interest << "\n";
  return result.accepted ? kExitOk : kExitRejected;
}

int cmd_sweep(const Options& opt) {
  const auto config = make_config(opt);
  const auto lib =
      build_library(load_shape_library(opt.library_path), config.grid,
                    config.normalize_radius);
  const fs::path out = fs::path(config.output_dir);

  if (opt.sweep_kind == "ideal") {
    fs::create_directories(out / "ideal");
    write_ideal_csv(run_ideal(lib, config), (out / "ideal" / "ideal.csv").string());
  } else if (opt.sweep_kind == "near") {
    fs::create_directories(out / "near");
    write_near_csv(run_near(lib, config), (out / "near" / "near.csv").string());
  } else if (opt.sweep_kind == "noise") {
    fs::create_directories(out / "noise");
    write_noise_csv(sweep_noise(lib, config),
                    (out / "noise" / "noise_trials.csv").string(),
                    (out / "noise" / "noise_summary.csv").string());
  } else if (opt.sweep_kind == "rotation") {
    fs::create_directories(out / "rotation");
    write_rotation_csv(sweep_rotation(lib, config),
                       (out / "rotation" / "rotation.csv").string());
  } else if (opt.sweep_kind == "param") {
    fs::create_directories(out / "param");
    write_param_csv(sweep_param(lib, config, ParamSweepKind::M),
                    (out / "param" / "param_m.csv").string());
    write_param_csv(sweep_param(lib, config, ParamSweepKind::N1),
                    (out / "param" / "param_n1.csv").string());
    write_param_csv(sweep_param(lib, config, ParamSweepKind::N23),
                    (out / "param" / "param_n23.csv").string());
  } else {
    std::cerr << "unknown sweep kind '" << opt.sweep_kind
              << "' (expected ideal|near|noise|rotation|param)\n";
    return kExitUsage;
  }
  std::cout << "sweep " << opt.sweep_kind << " written under "
            << config.output_dir << "\n";
  return kExitOk;
}

int cmd_render(const Options& opt) {
  const auto config = make_config(opt);
  const auto lib =
      build_library(load_shape_library(opt.library_path), config.grid,
                    config.normalize_radius);
  const auto paths = render_maps(lib, config);
  for (const auto& p : paths) std::cout << p << "\n";
  return kExitOk;
}

void add_grid_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--grid", opt.grid, "Grid cells per side (M = N)")
      ->capture_default_str();
  cmd->add_option("--angles", opt.angles, "Rays / outline samples per turn")
      ->capture_default_str();
  cmd->add_option("--sigma", opt.sigma, "Sensor standard deviation (map units)")
      ->capture_default_str();
  cmd->add_option("--radius", opt.radius, "Normalized max shape radius")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superformula shape library matching via information maps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read key=value defaults from a file");

  Options opt;
  int rc = kExitOk;
  if (const char* env_seed = std::getenv("SUPERSHAPE_SEED"))
    opt.seed = std::strtoull(env_seed, nullptr, 10);

  auto* gen = app.add_subcommand("gen", "Write outline CSVs and map PGMs");
  gen->add_option("--library", opt.library_path, "Shape library CSV")
      ->required();
  gen->add_option("--out", opt.out_dir, "Output directory")
      ->capture_default_str();
  add_grid_options(gen, opt);
  gen->callback([&] { rc = cmd_gen(opt); });

  auto* train = app.add_subcommand("train", "Train and save the eigen model");
  train->add_option("--library", opt.library_path, "Shape library CSV")
      ->required();
  train->add_option("--model", opt.model_path, "Model output path")->required();
  add_grid_options(train, opt);
  train->callback([&] { rc = cmd_train(opt); });

  auto* match = app.add_subcommand("match", "Classify an outline CSV");
  match->add_option("--model", opt.model_path, "Trained model path")->required();
  match->add_option("--outline", opt.outline_path, "Query outline CSV")
      ->required();
  match->add_option("--report", opt.report_path, "Append a match-report row");
  match->add_option("--gamma", opt.gamma, "Min accepted MScore")
      ->capture_default_str();
  match->add_option("--cutoff", opt.cutoff, "Max accepted nearest weight")
      ->capture_default_str();
  match->add_flag("--rotate-sweep", opt.rotate_sweep,
                  "Try all rotations at 1 degree steps");
  add_grid_options(match, opt);
  match->callback([&] { rc = cmd_match(opt); });

  auto* sweep = app.add_subcommand("sweep", "Run a batch experiment");
  sweep->add_option("--kind", opt.sweep_kind,
                    "ideal|near|noise|rotation|param")
      ->required();
  sweep->add_option("--library", opt.library_path, "Shape library CSV")
      ->required();
  sweep->add_option("--out", opt.out_dir, "Output directory")
      ->capture_default_str();
  sweep->add_option("--gamma", opt.gamma, "Min accepted MScore")
      ->capture_default_str();
  sweep->add_option("--cutoff", opt.cutoff, "Max accepted nearest weight")
      ->capture_default_str();
  sweep->add_option("--trials", opt.trials, "Trials per noise level")
      ->capture_default_str();
  sweep->add_option("--seed", opt.seed, "Base seed (or SUPERSHAPE_SEED)")
      ->capture_default_str();
  add_grid_options(sweep, opt);
  sweep->callback([&] { rc = cmd_sweep(opt); });

  auto* render = app.add_subcommand("render", "Write library map PGMs");
  render->add_option("--library", opt.library_path, "Shape library CSV")
      ->required();
  render->add_option("--out", opt.out_dir, "Output directory")
      ->capture_default_str();
  add_grid_options(render, opt);
  render->callback([&] { rc = cmd_render(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
