#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supershape/eigenmodel.hpp"
#include "supershape/infomap.hpp"
#include "supershape/shapegen.hpp"

namespace supershape {

/// Outcome of scoring one query map against the model.
struct MatchResult {
  std::vector<double> out_weights;  ///< epsilon_k per class
  double mscore = 0.0;              ///< 1 - min(w)/mean(w), in [0, 1]
  std::string nearest;              ///< class with the smallest weight
  int nearest_index = -1;
  double nearest_weight = 0.0;
  double mean_weight = 0.0;
  bool accepted = false;  ///< mscore > gamma and nearest_weight <= cutoff
  double rotation = 0.0;  ///< radians applied to the query before matching
};

/// Distance of the query's projection from every stored class projection.
std::vector<double> out_weights(const EigenModel& model, const InfoMap& query);

/// Match quality 1 - min(w)/mean(w). 1 means one class is uniquely near,
/// 0 means no discrimination. Throws DegenerateWeightsError when the mean is
/// not meaningfully positive.
double match_score(const std::vector<double>& weights);

/// Full scoring pass: weights, MScore, nearest class (ties to the lowest
/// index) and the acceptance decision against `gamma` and `theta_cutoff`.
MatchResult classify(const EigenModel& model, const InfoMap& query,
                     double gamma, double theta_cutoff);

/// Tries each candidate rotation, classifying the query as if it had been
/// rotated by that angle (i.e. counter-rotating it before mapping), and keeps
/// the angle whose MScore is closest to 1; ties go to the smallest angle.
/// Returns the winning result (with .rotation set) and the detected angle.
std::pair<MatchResult, double> rotation_sweep_classify(
    const EigenModel& model, const PolarOutline& outline, const GridSpec& spec,
    const std::vector<double>& angles, double gamma, double theta_cutoff);

/// Interest assigned to a classified object: the nearest class's library
/// interest scaled by match quality when accepted, 0 otherwise.
double interest_value(const MatchResult& result, const EigenModel& model);

/// Mission-time store of observed face-space projections.
struct NoveltyLibrary {
  struct Entry {
    std::vector<double> omega;
    std::string class_name;
  };
  std::vector<Entry> entries;
  size_t capacity = 0;  ///< 0 = unbounded; otherwise oldest entries drop
};

/// Distance from `omega` to the nearest stored observation; +infinity for an
/// empty library (everything is maximally novel at mission start).
double novelty_score(const NoveltyLibrary& lib, const std::vector<double>& omega);

/// Appends an observation, evicting the oldest entry at capacity.
void add_observation(NoveltyLibrary& lib, std::vector<double> omega,
                     std::string class_name);

/// Appends one row of the match report CSV
/// `query,rotation_deg,mscore,nearest,nearest_weight,mean_weight,accepted,interest`,
/// writing the header first when the file does not exist yet.
void append_match_report(const std::string& path, const std::string& query_name,
                         const MatchResult& result, double interest);

}  // namespace supershape
