#pragma once

#include <string>
#include <vector>

#include "supershape/infomap.hpp"

namespace supershape {

/// One library class: its name, assigned interest value, and the projection
/// of its training map into face space.
struct EigenClass {
  std::string name;
  double interest = 0.0;
  std::vector<double> omega;  ///< K coordinates
};

/// Trained eigenface basis over flattened information maps: the mean map, the
/// orthonormal principal directions with their eigenvalues (descending), and
/// the per-class projections.
struct EigenModel {
  int width = 0;
  int height = 0;
  std::vector<double> mean;                     ///< length width*height
  std::vector<std::vector<double>> eigenfaces;  ///< K unit vectors
  std::vector<double> eigenvalues;              ///< K values, descending
  std::vector<EigenClass> classes;

  int face_count() const { return static_cast<int>(eigenfaces.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Row-major vector of length M*N; inverse of unflatten.
std::vector<double> flatten(const InfoMap& map);

/// Rebuilds an InfoMap raster from a flat vector (grid geometry only; the
/// sensor fields of the returned spec are defaults).
InfoMap unflatten(const std::vector<double>& values, int width, int height);

/// Trains the eigenface model: subtracts the mean map from every training
/// map and extracts principal directions through the reduced count-by-count
/// inner-product system, so no M*N square matrix is ever decomposed.
/// Directions with eigenvalues <= 1e-10 of the largest are discarded, which
/// always leaves K < map count. Eigenvector sign is fixed by making the
/// largest-magnitude component positive.
///
/// Throws InsufficientTrainingError (< 2 maps), DegenerateTrainingError (no
/// non-zero eigenvalues, i.e. all maps identical), DimensionError, or
/// InvalidParameterError (duplicate names, count mismatches).
EigenModel train(const std::vector<InfoMap>& maps,
                 const std::vector<std::string>& names,
                 const std::vector<double>& interests);

/// Projects a map into face space: omega_k = u_k . (flatten(map) - mean).
std::vector<double> project(const EigenModel& model, const InfoMap& map);

/// Euclidean distance of a projection from the stored class projection.
double class_distance(const std::vector<double>& omega, const EigenModel& model,
                      int class_index);

/// Rebuilds the map mean + sum_k omega_k * u_k described by a projection.
InfoMap reconstruct(const EigenModel& model, const std::vector<double>& omega);

/// Serializes the model as versioned text (`EIGMODEL 1`). Values round-trip
/// through load_model to within 1e-12 relative.
void save_model(const EigenModel& model, const std::string& path);

/// Reads a model written by save_model.
EigenModel load_model(const std::string& path);

}  // namespace supershape
