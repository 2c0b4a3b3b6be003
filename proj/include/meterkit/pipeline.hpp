#ifndef METERKIT_PIPELINE_HPP_
#define METERKIT_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "meterkit/ctc.hpp"
#include "meterkit/reading.hpp"
#include "meterkit/synthmeter.hpp"

namespace meterkit {

struct PipelineConfig {
  double binarize_tau = 0.5;
  int hough_theta_bins = 180;
  bool dial_clockwise = true;
  int aligned_size = 640;

  bool operator==(const PipelineConfig&) const = default;
};

nlohmann::json ToJson(const PipelineConfig& cfg);
PipelineConfig ConfigFromJson(const nlohmann::json& j);

struct SceneInput {
  ImageBuffer image;
  ScoreMap pointer_map;
  ScoreMap key_scale_map;
  MeterAnnotation annotation;
  std::optional<ProbMatrix> number_probs;  // recognition-branch fixture
};

struct SceneFailure {
  std::size_t index = 0;
  std::string stage;
  std::string error_kind;
  std::string message;
};

struct PipelineReport {
  std::vector<ReadingResult> results;   // successful scenes, input order
  std::vector<SceneFailure> failures;
  double rel_percent = 0.0;  // aggregates over successful scenes
  double ref_percent = 0.0;
};

// Alignment from the annotation offsets, rescaled to cfg.aligned_size, then
// the reading chain with the dial frame at the aligned-image center. num_rec
// comes from greedy-decoding number_probs when present, otherwise from the
// annotation key number. Errors carry the failing stage name.
ReadingResult RunScene(const SceneInput& scene, const PipelineConfig& cfg);

PipelineReport RunBatch(const std::vector<SceneInput>& scenes,
                        const PipelineConfig& cfg);

// Scene directory layout: basename.png, basename.pointer.pgm,
// basename.keyscale.pgm, basename.json.
void WriteScene(const SynthScene& scene, const std::string& basename);
SceneInput LoadScene(const std::string& basename);

class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.kind(),
              "[" + stage + "] " + cause.what()),
        stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace meterkit

#endif  // METERKIT_PIPELINE_HPP_
