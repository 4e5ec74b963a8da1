#include "supershape/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <numeric>

#include "supershape/error.hpp"
#include "text_io.hpp"

namespace supershape {

std::vector<double> out_weights(const EigenModel& model, const InfoMap& query) {
  const auto omega = project(model, query);
  std::vector<double> weights(model.class_count());
  for (int k = 0; k < model.class_count(); ++k)
    weights[k] = class_distance(omega, model, k);
  return weights;
}

double match_score(const std::vector<double>& weights) {
  if (weights.empty())
    throw InvalidParameterError("match_score needs at least one weight");
  double min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidParameterError("out-weights must be finite and >= 0");
    min = std::min(min, w);
    sum += w;
  }
  const double mean = sum / static_cast<double>(weights.size());
  if (mean <= 1e-15)
    throw DegenerateWeightsError("all out-weights are (near) zero");
  return 1.0 - min / mean;
}

MatchResult classify(const EigenModel& model, const InfoMap& query,
                     double gamma, double theta_cutoff) {
  if (!(gamma >= 0.0) || !(gamma < 1.0))
    throw InvalidParameterError("gamma must lie in [0, 1)");
  if (!(theta_cutoff > 0.0))
    throw InvalidParameterError("cutoff must be positive");

  MatchResult result;
  result.out_weights = out_weights(model, query);
  result.mscore = match_score(result.out_weights);

  result.nearest_index = 0;
  for (int k = 1; k < static_cast<int>(result.out_weights.size()); ++k)
    if (result.out_weights[k] < result.out_weights[result.nearest_index])
      result.nearest_index = k;  // ties keep the lowest index
  result.nearest = model.classes[result.nearest_index].name;
  result.nearest_weight = result.out_weights[result.nearest_index];
  result.mean_weight =
      std::accumulate(result.out_weights.begin(), result.out_weights.end(), 0.0) /
      static_cast<double>(result.out_weights.size());
  result.accepted =
      result.mscore > gamma && result.nearest_weight <= theta_cutoff;
  return result;
}

std::pair<MatchResult, double> rotation_sweep_classify(
    const EigenModel& model, const PolarOutline& outline, const GridSpec& spec,
    const std::vector<double>& angles, double gamma, double theta_cutoff) {
  if (angles.empty())
    throw InvalidParameterError("rotation sweep needs at least one angle");

  MatchResult best;
  double best_angle = 0.0;
  bool first = true;
  for (double angle : angles) {
    // Hypothesize the query was rotated by `angle`; undo it and score.
    const auto unrotated = rotate_outline(outline, -angle);
    const auto map = shape_projection_map(unrotated, spec);
    MatchResult result = classify(model, map, gamma, theta_cutoff);
    result.rotation = angle;
    if (first || result.mscore > best.mscore ||
        (result.mscore == best.mscore && angle < best_angle)) {
      best = std::move(result);
      best_angle = angle;
      first = false;
    }
  }
  return {best, best_angle};
}

double interest_value(const MatchResult& result, const EigenModel& model) {
  const auto it =
      std::find_if(model.classes.begin(), model.classes.end(),
                   [&](const EigenClass& c) { return c.name == result.nearest; });
  if (it == model.classes.end())
    throw LookupError("unknown class '" + result.nearest + "'");
  return result.accepted ? it->interest * result.mscore : 0.0;
}

double novelty_score(const NoveltyLibrary& lib,
                     const std::vector<double>& omega) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& entry : lib.entries) {
    if (entry.omega.size() != omega.size())
      throw DimensionError("stored projection length differs from query");
    double sq = 0.0;
    for (size_t k = 0; k < omega.size(); ++k) {
      const double d = omega[k] - entry.omega[k];
      sq += d * d;
    }
    best = std::min(best, std::sqrt(sq));
  }
  return best;
}

void add_observation(NoveltyLibrary& lib, std::vector<double> omega,
                     std::string class_name) {
  if (!lib.entries.empty() && lib.entries.front().omega.size() != omega.size())
    throw DimensionError("projection length differs from stored entries");
  if (lib.capacity > 0 && lib.entries.size() >= lib.capacity)
    lib.entries.erase(lib.entries.begin());
  lib.entries.push_back({std::move(omega), std::move(class_name)});
}

void append_match_report(const std::string& path, const std::string& query_name,
                         const MatchResult& result, double interest) {
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open " + path + " for appending");
  if (fresh)
    out << "query,rotation_deg,mscore,nearest,nearest_weight,mean_weight,"
           "accepted,interest\n";
  out << query_name << ','
      << detail::fmt(result.rotation * 180.0 / std::numbers::pi) << ','
      << detail::fmt(result.mscore) << ',' << result.nearest << ','
      << detail::fmt(result.nearest_weight) << ','
      << detail::fmt(result.mean_weight) << ','
      << (result.accepted ? "true" : "false") << ',' << detail::fmt(interest)
      << '\n';
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace supershape
