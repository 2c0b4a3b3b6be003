#include "meterkit/pipeline.hpp"

#include <cmath>

#include "meterkit/metrics.hpp"
#include "meterkit/serialize.hpp"
#include "meterkit/warp.hpp"

namespace meterkit {

using nlohmann::json;

json ToJson(const PipelineConfig& cfg) {
  return json{{"binarize_tau", cfg.binarize_tau},
              {"hough_theta_bins", cfg.hough_theta_bins},
              {"dial_clockwise", cfg.dial_clockwise},
              {"aligned_size", cfg.aligned_size}};
}

PipelineConfig ConfigFromJson(const json& j) {
  PipelineConfig cfg;
  cfg.binarize_tau = j.value("binarize_tau", cfg.binarize_tau);
  cfg.hough_theta_bins = j.value("hough_theta_bins", cfg.hough_theta_bins);
  cfg.dial_clockwise = j.value("dial_clockwise", cfg.dial_clockwise);
  cfg.aligned_size = j.value("aligned_size", cfg.aligned_size);
  if (!(cfg.binarize_tau > 0.0 && cfg.binarize_tau < 1.0) ||
      cfg.aligned_size < 32) {
    throw Error(ErrorKind::kInvalidArgument, "invalid pipeline config");
  }
  return cfg;
}

namespace {

template <typename F>
auto Stage(const char* name, F&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

}  // namespace

ReadingResult RunScene(const SceneInput& scene, const PipelineConfig& cfg) {
  const int w = scene.image.width();
  const int h = scene.image.height();
  const int out = cfg.aligned_size;

  const Homography align = Stage("alignment", [&] {
    const Homography h_off = OffsetsToHomography(w, h, scene.annotation.offsets);
    const double s = (out - 1.0) / (w - 1.0);
    return Canonical(Compose(Homography::Scale(s, s), Inverse(h_off)));
  });

  const ScoreMap pointer = Stage("alignment", [&] {
    return WarpScoreMap(scene.pointer_map, align, out, out);
  });
  const ScoreMap key_scale = Stage("alignment", [&] {
    return WarpScoreMap(scene.key_scale_map, align, out, out);
  });

  const double num_rec = Stage("recognition", [&] {
    if (scene.number_probs) {
      return ParseNumeric(GreedyDecode(*scene.number_probs, Alphabet::Default()));
    }
    return ParseNumeric(scene.annotation.key_number);
  });

  return Stage("reading", [&] {
    const double s = (out - 1.0) / (w - 1.0);
    DialFrame frame;
    frame.center = {(out - 1.0) / 2.0, (out - 1.0) / 2.0};
    frame.clockwise = cfg.dial_clockwise;
    frame.zero_hint = Point2{scene.annotation.zero_scale.x * s,
                             scene.annotation.zero_scale.y * s};
    return ReadMeter(pointer, key_scale, num_rec, frame, cfg.binarize_tau,
                     cfg.hough_theta_bins);
  });
}

PipelineReport RunBatch(const std::vector<SceneInput>& scenes,
                        const PipelineConfig& cfg) {
  PipelineReport report;
  std::vector<EvalRecord> records;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    try {
      ReadingResult r = RunScene(scenes[i], cfg);
      records.push_back(
          {r.value, scenes[i].annotation.true_reading, r.num_rec});
      report.results.push_back(std::move(r));
    } catch (const StageError& e) {
      report.failures.push_back(
          {i, e.stage(), ErrorKindName(e.kind()), e.what()});
    } catch (const Error& e) {
      report.failures.push_back(
          {i, "input", ErrorKindName(e.kind()), e.what()});
    }
  }
  if (!records.empty()) {
    report.rel_percent = AvgRelativeError(records);
    report.ref_percent = AvgReferenceError(records);
  }
  return report;
}

void WriteScene(const SynthScene& scene, const std::string& basename) {
  SaveImage(scene.image, basename + ".png");
  SaveImage(scene.pointer_map_gt.image(), basename + ".pointer.pgm");
  SaveImage(scene.key_scale_map_gt.image(), basename + ".keyscale.pgm");
  WriteTextFile(basename + ".json", ToJson(scene.annotation).dump(2) + "\n");
}

SceneInput LoadScene(const std::string& basename) {
  ImageBuffer image = LoadImage(basename + ".png");
  ScoreMap pointer(LoadImage(basename + ".pointer.pgm"));
  ScoreMap key_scale(LoadImage(basename + ".keyscale.pgm"));
  MeterAnnotation ann =
      AnnotationFromJson(json::parse(ReadTextFile(basename + ".json")));
  return SceneInput{std::move(image), std::move(pointer), std::move(key_scale),
                    std::move(ann), std::nullopt};
}

}  // namespace meterkit
