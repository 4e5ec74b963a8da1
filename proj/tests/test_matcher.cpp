#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "supershape/error.hpp"
#include "supershape/harness.hpp"
#include "supershape/matcher.hpp"

using namespace supershape;

namespace {

constexpr double kPi = std::numbers::pi;

struct Fixture {
  GridSpec spec;
  TrainedLibrary lib;
  Fixture() : lib(build_library(paper_base_library(), spec, 0.45)) {}
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

std::filesystem::path temp_file(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "supershape_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("out_weights vanish at the query's own class") {
  const auto& f = fixture();
  for (size_t i = 0; i < f.lib.maps.size(); ++i) {
    const auto weights = out_weights(f.lib.model, f.lib.maps[i]);
    REQUIRE(weights.size() == 3);
    for (size_t k = 0; k < weights.size(); ++k) {
      if (k == i)
        CHECK(weights[k] <= 1e-9);
      else
        CHECK(weights[k] > 1e-4);
    }
  }
}

TEST_CASE("near-variant weights sit far below the other classes") {
  const auto& f = fixture();
  const auto near_tri = paper_near_variants()[0];
  const auto map = build_shape_map(near_tri.params, f.spec, 0.45);
  const auto weights = out_weights(f.lib.model, map);
  CHECK(weights[0] < 1e-4);  // paper reports 8.9e-7 at its resolution
  CHECK(weights[0] < 0.01 * weights[1]);
  CHECK(weights[0] < 0.01 * weights[2]);
}

TEST_CASE("out_weights are permutation-equivariant with class order") {
  const auto& f = fixture();
  auto permuted_model = f.lib.model;
  std::swap(permuted_model.classes[0], permuted_model.classes[2]);
  const auto base = out_weights(f.lib.model, f.lib.maps[1]);
  const auto swapped = out_weights(permuted_model, f.lib.maps[1]);
  CHECK(swapped[0] == base[2]);
  CHECK(swapped[1] == base[1]);
  CHECK(swapped[2] == base[0]);
}

TEST_CASE("match_score reproduces the reported table rows") {
  // Ideal rows: a zero minimum always scores 1.
  CHECK(match_score({0.0, 2.1e-3, 8.4e-3}) == doctest::Approx(1.0));
  // Weights with min 0 and mean 3.5e-3.
  CHECK(match_score({0.0, 2.1e-3, 8.4e-3}) == 1.0);
  // Near 6-pointed star row: min 3.6e-4, mean 4.7e-3 -> 0.9234 (printed 0.92).
  CHECK(match_score({3.6e-4, 2.6e-3, 11.1e-3}) ==
        doctest::Approx(1.0 - 3.6e-4 / 4.7e-3).epsilon(1e-12));
  CHECK(match_score({3.6e-4, 2.6e-3, 11.1e-3}) ==
        doctest::Approx(0.9234).epsilon(1e-4));
}

TEST_CASE("match_score properties") {
  CHECK(match_score({0.7, 0.7, 0.7}) == 0.0);  // no discrimination

  // Scale invariance and bounds.
  const std::vector<double> weights{1e-4, 3e-3, 9e-3, 2e-2};
  const double base = match_score(weights);
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    std::vector<double> scaled;
    for (double w : weights) scaled.push_back(c * w);
    CHECK(match_score(scaled) == doctest::Approx(base).epsilon(1e-12));
  }
  CHECK(base > 0.0);
  CHECK(base <= 1.0);
  CHECK(match_score({0.0, 1.0}) == 1.0);  // 1 iff the minimum is 0

  CHECK_THROWS_AS(match_score({}), InvalidParameterError);
  CHECK_THROWS_AS(match_score({-1.0, 2.0}), InvalidParameterError);
  CHECK_THROWS_AS(match_score({0.0, 0.0, 0.0}), DegenerateWeightsError);
}

TEST_CASE("self classification is perfect for every library shape") {
  const auto& f = fixture();
  for (size_t i = 0; i < f.lib.maps.size(); ++i) {
    const auto result = classify(f.lib.model, f.lib.maps[i], 0.85, 1e-2);
    CHECK(result.nearest == f.lib.shapes[i].name);
    CHECK(result.mscore == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.nearest_weight <= 1e-9);
    CHECK(result.accepted);
    CHECK(result.mean_weight ==
          doctest::Approx(
              (result.out_weights[0] + result.out_weights[1] +
               result.out_weights[2]) / 3.0));
  }
}

TEST_CASE("gamma gates acceptance") {
  const auto& f = fixture();
  const auto near_star = paper_near_variants()[2];
  const auto map = build_shape_map(near_star.params, f.spec, 0.45);

  const auto relaxed = classify(f.lib.model, map, 0.5, 1e-2);
  CHECK(relaxed.nearest == "six_pointed_star");
  CHECK(relaxed.accepted);

  const auto strict = classify(f.lib.model, map, 0.99, 1e-2);
  CHECK(strict.mscore < 0.99);
  CHECK_FALSE(strict.accepted);

  // The cutoff criterion rejects on its own as well.
  const auto tiny_cutoff = classify(f.lib.model, map, 0.5, 1e-9);
  CHECK_FALSE(tiny_cutoff.accepted);

  CHECK_THROWS_AS(classify(f.lib.model, map, 1.0, 1e-2), InvalidParameterError);
  CHECK_THROWS_AS(classify(f.lib.model, map, 0.5, 0.0), InvalidParameterError);
}

TEST_CASE("classification ties break toward the lowest class index") {
  EigenModel model;
  model.width = 1;
  model.height = 2;
  model.mean = {0.0, 0.0};
  model.eigenfaces = {{1.0, 0.0}, {0.0, 1.0}};
  model.eigenvalues = {1.0, 1.0};
  model.classes = {{"left", 1.0, {-1.0, 0.0}},
                   {"right", 1.0, {1.0, 0.0}},
                   {"far", 1.0, {9.0, 0.0}}};
  InfoMap query;
  query.spec.width = 1;
  query.spec.height = 2;
  query.values = {0.0, 0.0};  // equidistant from left and right
  const auto result = classify(model, query, 0.0, 10.0);
  CHECK(result.nearest == "left");
  CHECK(result.nearest_index == 0);
}

TEST_CASE("rotation sweep recovers a 17 degree rotation") {
  const auto& f = fixture();
  const auto query = rotate_outline(f.lib.outlines[0], 17.0 * kPi / 180.0);
  std::vector<double> angles;
  for (int deg = 0; deg < 360; ++deg) angles.push_back(deg * kPi / 180.0);

  const auto [result, best] = rotation_sweep_classify(
      f.lib.model, query, f.spec, angles, 0.85, 1e-2);
  CHECK(result.nearest == "rounded_triangle");
  CHECK(result.mscore >= 0.99);
  // 17 degrees modulo the 3-fold symmetry period; ties pick the smallest.
  CHECK(best == doctest::Approx(17.0 * kPi / 180.0).epsilon(1e-12));
  CHECK(result.rotation == best);
}

TEST_CASE("rotation sweep at symmetry angles scores equally") {
  const auto& f = fixture();
  const auto query = f.lib.outlines[0];  // 3-fold triangle
  const std::vector<double> angles{0.0, 2 * kPi / 3, 4 * kPi / 3};
  std::vector<double> scores;
  for (double angle : angles) {
    const auto map =
        shape_projection_map(rotate_outline(query, angle), f.spec);
    scores.push_back(classify(f.lib.model, map, 0.85, 1e-2).mscore);
  }
  CHECK(scores[0] == doctest::Approx(scores[1]).epsilon(1e-9));
  CHECK(scores[0] == doctest::Approx(scores[2]).epsilon(1e-9));
}

TEST_CASE("rotation sweep over a single zero angle equals plain classify") {
  const auto& f = fixture();
  const auto [swept, best] = rotation_sweep_classify(
      f.lib.model, f.lib.outlines[2], f.spec, {0.0}, 0.85, 1e-2);
  const auto direct =
      classify(f.lib.model, f.lib.maps[2], 0.85, 1e-2);
  CHECK(best == 0.0);
  CHECK(swept.mscore == direct.mscore);
  CHECK(swept.nearest == direct.nearest);

  CHECK_THROWS_AS(
      rotation_sweep_classify(f.lib.model, f.lib.outlines[0], f.spec, {}, 0.85,
                              1e-2),
      InvalidParameterError);
}

TEST_CASE("interest scales with match quality and acceptance") {
  const auto& f = fixture();
  MatchResult result;
  result.nearest = "rounded_triangle";
  result.mscore = 1.0;
  result.accepted = true;
  CHECK(interest_value(result, f.lib.model) == doctest::Approx(10.0));

  result.mscore = 0.92;
  CHECK(interest_value(result, f.lib.model) == doctest::Approx(9.2));

  result.accepted = false;
  CHECK(interest_value(result, f.lib.model) == 0.0);

  result.nearest = "unknown_shape";
  result.accepted = true;
  CHECK_THROWS_AS(interest_value(result, f.lib.model), LookupError);
}

TEST_CASE("novelty library") {
  NoveltyLibrary lib;
  const std::vector<double> omega{1.0, 2.0};
  CHECK(novelty_score(lib, omega) ==
        std::numeric_limits<double>::infinity());

  add_observation(lib, {1.0, 2.0}, "tri");
  CHECK(novelty_score(lib, omega) == 0.0);

  add_observation(lib, {4.0, 6.0}, "star");  // distance 5 from omega
  add_observation(lib, {1.0, 5.0}, "blunt");  // distance 3 from omega
  CHECK(novelty_score(lib, {1.0, 2.0}) == 0.0);
  CHECK(novelty_score(lib, {4.0, 2.0}) == doctest::Approx(3.0));

  // Novelty never increases as observations accumulate.
  NoveltyLibrary growing;
  double prev = novelty_score(growing, omega);
  for (int i = 0; i < 6; ++i) {
    add_observation(growing, {i * 1.0, i * 2.0}, "x");
    const double now = novelty_score(growing, omega);
    CHECK(now <= prev);
    prev = now;
  }

  CHECK_THROWS_AS(novelty_score(lib, {1.0}), DimensionError);
  CHECK_THROWS_AS(add_observation(lib, {1.0, 2.0, 3.0}, "bad"),
                  DimensionError);
}

TEST_CASE("novelty library capacity evicts the oldest entry") {
  NoveltyLibrary lib;
  lib.capacity = 2;
  add_observation(lib, {0.0}, "first");
  add_observation(lib, {5.0}, "second");
  add_observation(lib, {9.0}, "third");
  REQUIRE(lib.entries.size() == 2);
  CHECK(lib.entries[0].class_name == "second");
  CHECK(novelty_score(lib, {0.0}) == doctest::Approx(5.0));
}

TEST_CASE("match report rows accumulate with one header") {
  const auto path = temp_file("report.csv");
  std::filesystem::remove(path);

  MatchResult result;
  result.rotation = kPi / 2;
  result.mscore = 0.5;
  result.nearest = "star";
  result.nearest_weight = 1.5e-3;
  result.mean_weight = 4.0e-3;
  result.accepted = true;
  append_match_report(path.string(), "query_a", result, 3.0);
  result.accepted = false;
  append_match_report(path.string(), "query_b", result, 0.0);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "query,rotation_deg,mscore,nearest,nearest_weight,mean_weight,"
        "accepted,interest");
  std::getline(in, line);
  CHECK(line.find("query_a,90,0.5,star,") == 0);
  CHECK(line.find(",true,3") != std::string::npos);
  std::getline(in, line);
  CHECK(line.find("query_b,") == 0);
  CHECK(line.find(",false,0") != std::string::npos);
}
