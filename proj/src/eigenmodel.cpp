#include "supershape/eigenmodel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "supershape/error.hpp"
#include "supershape/numeric.hpp"
#include "text_io.hpp"

namespace supershape {

namespace {

constexpr double kEigenvalueCutoff = 1e-10;  // relative to the largest

// Spread this far below the squared data magnitude is floating-point noise,
// not signal (identical maps differ only in mean-subtraction rounding).
constexpr double kDegenerateRatio = 1e-20;

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace

std::vector<double> flatten(const InfoMap& map) {
  return map.values;
}

InfoMap unflatten(const std::vector<double>& values, int width, int height) {
  if (width < 1 || height < 1)
    throw InvalidParameterError("unflatten dimensions must be >= 1");
  if (values.size() != static_cast<size_t>(width) * height)
    throw DimensionError("unflatten: value count does not match dimensions");
  InfoMap map;
  map.spec.width = width;
  map.spec.height = height;
  map.values = values;
  return map;
}

EigenModel train(const std::vector<InfoMap>& maps,
                 const std::vector<std::string>& names,
                 const std::vector<double>& interests) {
  const int count = static_cast<int>(maps.size());
  if (count < 2)
    throw InsufficientTrainingError("training needs at least 2 maps");
  if (names.size() != maps.size() || interests.size() != maps.size())
    throw InvalidParameterError("names/interests count must match map count");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw InvalidParameterError("training names must be unique");

  const int width = maps[0].spec.width;
  const int height = maps[0].spec.height;
  const size_t dim = static_cast<size_t>(width) * height;
  for (const auto& m : maps) {
    if (m.spec.width != width || m.spec.height != height ||
        m.values.size() != dim)
      throw DimensionError("training maps must share one grid size");
  }

  EigenModel model;
  model.width = width;
  model.height = height;

  model.mean.assign(dim, 0.0);
  for (const auto& m : maps)
    for (size_t i = 0; i < dim; ++i) model.mean[i] += m.values[i];
  for (double& v : model.mean) v /= count;

  std::vector<std::vector<double>> centered(count);
  double data_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    centered[i].resize(dim);
    for (size_t j = 0; j < dim; ++j)
      centered[i][j] = maps[i].values[j] - model.mean[j];
    data_sq = std::max(data_sq, dot(maps[i].values, maps[i].values));
  }

  // Reduced system: the count x count Gram matrix shares its non-zero
  // eigenvalues with the full covariance (1/count) * sum phi phi^T.
  std::vector<double> gram(static_cast<size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      const double g = dot(centered[i], centered[j]) / count;
      gram[static_cast<size_t>(i) * count + j] = g;
      gram[static_cast<size_t>(j) * count + i] = g;
    }

  const auto eig = jacobi_eigendecompose(std::move(gram), count);
  const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
  if (!(lambda_max > kDegenerateRatio * data_sq))
    throw DegenerateTrainingError(
        "training maps are identical: no non-zero eigenvalues");

  for (int k = 0; k < count; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= kEigenvalueCutoff * lambda_max) break;

    std::vector<double> face(dim, 0.0);
    for (int i = 0; i < count; ++i) {
      const double w = eig.eigenvectors[k][i];
      for (size_t j = 0; j < dim; ++j) face[j] += w * centered[i][j];
    }
    const double norm = std::sqrt(dot(face, face));
    for (double& f : face) f /= norm;

    size_t peak = 0;
    for (size_t j = 1; j < dim; ++j)
      if (std::abs(face[j]) > std::abs(face[peak])) peak = j;
    if (face[peak] < 0.0)
      for (double& f : face) f = -f;

    model.eigenfaces.push_back(std::move(face));
    model.eigenvalues.push_back(lambda);
  }

  for (int i = 0; i < count; ++i) {
    EigenClass cls;
    cls.name = names[i];
    cls.interest = interests[i];
    cls.omega.resize(model.eigenfaces.size());
    for (size_t k = 0; k < model.eigenfaces.size(); ++k)
      cls.omega[k] = dot(model.eigenfaces[k], centered[i]);
    model.classes.push_back(std::move(cls));
  }
  return model;
}

std::vector<double> project(const EigenModel& model, const InfoMap& map) {
  const size_t dim = static_cast<size_t>(model.width) * model.height;
  if (map.spec.width != model.width || map.spec.height != model.height ||
      map.values.size() != dim)
    throw DimensionError("map grid does not match the model grid");
  std::vector<double> diff(dim);
  for (size_t i = 0; i < dim; ++i) diff[i] = map.values[i] - model.mean[i];
  std::vector<double> omega(model.eigenfaces.size());
  for (size_t k = 0; k < model.eigenfaces.size(); ++k)
    omega[k] = dot(model.eigenfaces[k], diff);
  return omega;
}

double class_distance(const std::vector<double>& omega, const EigenModel& model,
                      int class_index) {
  if (class_index < 0 || class_index >= model.class_count())
    throw LookupError("class index out of range");
  const auto& stored = model.classes[class_index].omega;
  if (omega.size() != stored.size())
    throw DimensionError("projection length does not match the model");
  double sq = 0.0;
  for (size_t k = 0; k < omega.size(); ++k) {
    const double d = omega[k] - stored[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

InfoMap reconstruct(const EigenModel& model, const std::vector<double>& omega) {
  if (omega.size() != model.eigenfaces.size())
    throw DimensionError("projection length does not match the model");
  std::vector<double> values = model.mean;
  for (size_t k = 0; k < omega.size(); ++k)
    for (size_t j = 0; j < values.size(); ++j)
      values[j] += omega[k] * model.eigenfaces[k][j];
  return unflatten(values, model.width, model.height);
}

void save_model(const EigenModel& model, const std::string& path) {
  auto out = detail::open_output(path);
  out << "EIGMODEL 1\n";
  out << "grid " << model.width << ' ' << model.height << '\n';
  out << "eigen " << model.face_count() << '\n';
  out << "classes " << model.class_count() << '\n';

  auto write_vector = [&out](const std::vector<double>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      out << detail::fmt(v[i]) << (i + 1 == v.size() ? '\n' : ' ');
    if (v.empty()) out << '\n';
  };

  write_vector(model.mean);
  for (const auto& face : model.eigenfaces) write_vector(face);
  for (const auto& cls : model.classes) {
    out << "class " << cls.name << ' ' << detail::fmt(cls.interest) << '\n';
    write_vector(cls.omega);
  }
  if (!out) throw IoError("failed writing " + path);
}

namespace {

std::vector<double> read_vector(std::istream& in, size_t n,
                                const std::string& path) {
  std::vector<double> v(n);
  for (size_t i = 0; i < n; ++i)
    if (!(in >> v[i])) throw ParseError(path + ": truncated vector data");
  return v;
}

}  // namespace

EigenModel load_model(const std::string& path) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != "EIGMODEL 1")
    throw ParseError(path + ":1: expected 'EIGMODEL 1'");

  EigenModel model;
  int faces = 0, classes = 0;
  std::string tag;
  if (!(in >> tag >> model.width >> model.height) || tag != "grid" ||
      model.width < 1 || model.height < 1)
    throw ParseError(path + ":2: expected 'grid M N'");
  if (!(in >> tag >> faces) || tag != "eigen" || faces < 0)
    throw ParseError(path + ":3: expected 'eigen K'");
  if (!(in >> tag >> classes) || tag != "classes" || classes < 0)
    throw ParseError(path + ":4: expected 'classes C'");

  const size_t dim = static_cast<size_t>(model.width) * model.height;
  model.mean = read_vector(in, dim, path);
  for (int k = 0; k < faces; ++k)
    model.eigenfaces.push_back(read_vector(in, dim, path));
  model.eigenvalues.assign(faces, 0.0);  // not serialized; kept for symmetry
  for (int c = 0; c < classes; ++c) {
    if (!(in >> tag) || tag != "class")
      throw ParseError(path + ": expected 'class <name> <interest>'");
    std::getline(in, line);
    std::istringstream rest(detail::trim(line));
    std::vector<std::string> words;
    std::string w;
    while (rest >> w) words.push_back(w);
    if (words.size() < 2)
      throw ParseError(path + ": expected 'class <name> <interest>'");
    EigenClass cls;
    cls.interest = detail::parse_double(words.back(), path, 0);
    std::string name = words[0];
    for (size_t i = 1; i + 1 < words.size(); ++i) name += " " + words[i];
    cls.name = name;
    cls.omega = read_vector(in, faces, path);
    model.classes.push_back(std::move(cls));
  }
  return model;
}

}  // namespace supershape
