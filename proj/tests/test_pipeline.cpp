#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "meterkit/ctc.hpp"
#include "meterkit/pipeline.hpp"

using namespace meterkit;
namespace fs = std::filesystem;

namespace {

SceneInput ToInput(const SynthScene& scene) {
  return SceneInput{scene.image, scene.pointer_map_gt, scene.key_scale_map_gt,
                    scene.annotation, std::nullopt};
}

SynthScene MakeScene(std::uint64_t seed, bool distort) {
  SpecConstraints cons;
  cons.distort = distort;
  return Render(RandomSpec(seed, cons));
}

ProbMatrix OneHot(const std::string& tokens) {
  const auto a = Alphabet::Default();
  std::vector<double> rows;
  for (char ch : tokens) {
    const int k = ch == '.' ? 10 : ch - '0';
    for (int j = 0; j < 12; ++j) rows.push_back(j == k ? 1.0 : 0.0);
  }
  return ProbMatrix(static_cast<int>(tokens.size()), 12, std::move(rows));
}

}  // namespace

TEST_CASE("pipeline config json round trip") {
  PipelineConfig cfg;
  cfg.binarize_tau = 0.45;
  cfg.hough_theta_bins = 360;
  cfg.dial_clockwise = false;
  cfg.aligned_size = 512;
  CHECK(ConfigFromJson(ToJson(cfg)) == cfg);
  CHECK(ConfigFromJson(nlohmann::json::object()) == PipelineConfig{});
}

TEST_CASE("run_scene: undistorted scene recovers the true reading") {
  for (std::uint64_t seed = 500; seed < 510; ++seed) {
    const auto scene = MakeScene(seed, false);
    const auto r = RunScene(ToInput(scene), PipelineConfig{});
    const double gt = scene.annotation.true_reading;
    const double denom = std::max(std::abs(gt), 0.05);
    CHECK(std::abs(r.value - gt) / denom < 0.005);
  }
}

TEST_CASE("run_scene: distorted scene aligns back within 1%") {
  for (std::uint64_t seed = 600; seed < 610; ++seed) {
    const auto scene = MakeScene(seed, true);
    const auto r = RunScene(ToInput(scene), PipelineConfig{});
    const double gt = scene.annotation.true_reading;
    const double denom = std::max(std::abs(gt), 0.05);
    CHECK(std::abs(r.value - gt) / denom < 0.01);
  }
}

TEST_CASE("run_scene: number probs override the annotation key number") {
  const auto scene = MakeScene(700, false);
  auto input = ToInput(scene);
  input.number_probs = OneHot("10");
  const auto r = RunScene(input, PipelineConfig{});
  CHECK(r.num_rec == doctest::Approx(10.0));
}

TEST_CASE("run_scene: empty pointer map fails in the reading stage") {
  const auto scene = MakeScene(701, false);
  auto input = ToInput(scene);
  input.pointer_map = ScoreMap(input.pointer_map.width(),
                               input.pointer_map.height());
  try {
    RunScene(input, PipelineConfig{});
    FAIL("expected a stage-tagged error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "reading");
    CHECK(e.kind() == ErrorKind::kEmptyPointer);
  }
}

TEST_CASE("run_scene: bad number probs fail in the recognition stage") {
  const auto scene = MakeScene(702, false);
  auto input = ToInput(scene);
  input.number_probs = OneHot("1.2.3");  // decodes verbatim, two dots
  try {
    RunScene(input, PipelineConfig{});
    FAIL("expected a stage-tagged error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "recognition");
    CHECK(e.kind() == ErrorKind::kUnparseableNumber);
  }
}

TEST_CASE("run_batch isolates failures and aggregates the rest") {
  std::vector<SceneInput> scenes;
  for (std::uint64_t seed = 800; seed < 804; ++seed) {
    scenes.push_back(ToInput(MakeScene(seed, false)));
  }
  scenes[2].pointer_map =
      ScoreMap(scenes[2].pointer_map.width(), scenes[2].pointer_map.height());

  const auto report = RunBatch(scenes, PipelineConfig{});
  CHECK(report.results.size() == 3);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].index == 2);
  CHECK(report.failures[0].stage == "reading");
  CHECK(report.failures[0].error_kind ==
        std::string(ErrorKindName(ErrorKind::kEmptyPointer)));
  CHECK(report.rel_percent < 0.5);
  CHECK(report.ref_percent >= 0.0);
}

TEST_CASE("scene write/load round trip preserves the pipeline result") {
  const auto dir = fs::temp_directory_path() / "meterkit_pipeline_test";
  fs::create_directories(dir);
  const auto scene = MakeScene(900, true);
  const std::string base = (dir / "scene900").string();
  WriteScene(scene, base);
  CHECK(fs::exists(base + ".png"));
  CHECK(fs::exists(base + ".pointer.pgm"));
  CHECK(fs::exists(base + ".keyscale.pgm"));
  CHECK(fs::exists(base + ".json"));

  const auto loaded = LoadScene(base);
  const auto direct = RunScene(ToInput(scene), PipelineConfig{});
  const auto from_disk = RunScene(loaded, PipelineConfig{});
  // The maps pass through 8-bit quantization; hard-edged GT survives it.
  CHECK(from_disk.value == doctest::Approx(direct.value).epsilon(1e-6));
  CHECK(loaded.annotation.key_number == scene.annotation.key_number);
  CHECK(loaded.annotation.true_reading ==
        doctest::Approx(scene.annotation.true_reading));
}
