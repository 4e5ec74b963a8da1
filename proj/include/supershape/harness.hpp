#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supershape/eigenmodel.hpp"
#include "supershape/infomap.hpp"
#include "supershape/matcher.hpp"
#include "supershape/shapegen.hpp"

namespace supershape {

/// Everything a batch experiment needs: grid geometry, thresholds, sweep
/// grids, trial counts and seeding. Defaults reproduce the reference
/// experiment set.
struct ExperimentConfig {
  GridSpec grid;
  double normalize_radius = 0.45;  ///< shapes are sized to this max radius
  double gamma = 0.85;             ///< MScore acceptance threshold
  double theta_cutoff = 1e-2;      ///< max acceptable nearest weight

  std::vector<double> noise_percents;  ///< default 0, 0.01, ..., 0.20
  std::string noise_shape = "rounded_triangle";
  int trials = 30;

  std::vector<double> rotation_angles_deg;  ///< default 0, 1, ..., 360

  // Parameter sweeps: m half-width is absolute, n sweeps are relative spans.
  std::string m_sweep_shape = "rounded_triangle";
  double m_half_width = 0.5;
  double m_step = 0.125;
  std::string n1_sweep_shape = "six_pointed_star";
  double n1_rel_width = 0.10;
  int n1_steps = 21;
  std::string n23_sweep_shape = "six_pointed_star";
  double n23_rel_width = 0.10;
  int n23_steps = 21;

  std::uint64_t base_seed = 0;
  std::string output_dir = "out";
};

/// Fills every defaulted sweep grid that was left empty and validates ranges.
void finalize(ExperimentConfig& config);

/// The three reference library shapes with their interest values.
std::vector<LibraryShape> paper_base_library();

/// The modified ("near") variants of the reference shapes, named
/// near_<base>; classification should recover the base shape.
std::vector<LibraryShape> paper_near_variants();

/// Base shape name a near variant should match (strips the near_ prefix).
std::string expected_base_name(const std::string& near_name);

/// Samples, sizes and maps one parameter set.
InfoMap build_shape_map(const SuperformulaParams& params, const GridSpec& grid,
                        double normalize_radius, double rotation = 0.0);

/// A shape library taken through sampling, sizing, mapping and training.
struct TrainedLibrary {
  std::vector<LibraryShape> shapes;
  std::vector<PolarOutline> outlines;  ///< sized outlines, one per shape
  std::vector<InfoMap> maps;
  EigenModel model;
};

TrainedLibrary build_library(const std::vector<LibraryShape>& shapes,
                             const GridSpec& grid, double normalize_radius);

struct IdealRow {
  std::string shape;
  double mscore = 0.0;
  double min_weight = 0.0;
  double mean_weight = 0.0;
  std::string nearest;
  bool correct = false;
};

/// Classifies every library shape against its own trained model (the ideal
/// self-match table).
std::vector<IdealRow> run_ideal(const TrainedLibrary& lib,
                                const ExperimentConfig& config);

struct NearRow {
  std::string shape;
  double mscore = 0.0;
  double out_weight = 0.0;            ///< weight of the matched class
  double nearest_other_weight = 0.0;  ///< smallest weight among other classes
  double mean_weight = 0.0;
  std::string nearest;
  bool correct = false;
};

/// Classifies modified shape variants against the base library. `variants`
/// defaults to the reference near shapes when empty.
std::vector<NearRow> run_near(const TrainedLibrary& lib,
                              const ExperimentConfig& config,
                              std::vector<LibraryShape> variants = {});

struct NoiseTrialRow {
  double noise_pct = 0.0;
  int trial = 0;
  double mscore = 0.0;
  bool correct = false;
};

struct NoiseSummaryRow {
  double noise_pct = 0.0;
  double mean_mscore = 0.0;
  double std_mscore = 0.0;
  double correct_rate = 0.0;
};

struct NoiseSweep {
  std::vector<NoiseTrialRow> trials;
  std::vector<NoiseSummaryRow> summary;
};

/// Seeded noise trials on the configured shape at every noise level. A trial
/// is correct when the noisy outline still classifies to its shape and the
/// match is accepted. Trial seeds derive from base_seed so reruns are
/// identical.
NoiseSweep sweep_noise(const TrainedLibrary& lib, const ExperimentConfig& config);

struct RotationRow {
  std::string shape;
  double angle_deg = 0.0;
  double mscore = 0.0;
};

/// MScore of every library shape rotated through the configured angles.
std::vector<RotationRow> sweep_rotation(const TrainedLibrary& lib,
                                        const ExperimentConfig& config);

enum class ParamSweepKind { M, N1, N23 };

struct ParamRow {
  std::string shape;
  std::string param;  ///< "m", "n1" or "n23"
  double value = 0.0;
  double mscore = 0.0;
};

/// MScore of the designated shape as one parameter family moves through the
/// configured neighborhood of its base value (m varies m1 = m2 together,
/// n23 varies n2 = n3 together).
std::vector<ParamRow> sweep_param(const TrainedLibrary& lib,
                                  const ExperimentConfig& config,
                                  ParamSweepKind kind);

/// Writes each library shape's projection map as out_dir/maps/<name>.pgm and
/// returns the paths.
std::vector<std::string> render_maps(const TrainedLibrary& lib,
                                     const ExperimentConfig& config);

// CSV emission (schemas documented per experiment). All writers are
// deterministic: identical inputs give byte-identical files.
void write_ideal_csv(const std::vector<IdealRow>& rows, const std::string& path);
void write_near_csv(const std::vector<NearRow>& rows, const std::string& path);
void write_noise_csv(const NoiseSweep& sweep, const std::string& trials_path,
                     const std::string& summary_path);
void write_rotation_csv(const std::vector<RotationRow>& rows,
                        const std::string& path);
void write_param_csv(const std::vector<ParamRow>& rows, const std::string& path);

}  // namespace supershape
