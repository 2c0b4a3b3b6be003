#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "meterkit/metrics.hpp"
#include "meterkit/pipeline.hpp"
#include "meterkit/serialize.hpp"
#include "meterkit/synthmeter.hpp"
#include "meterkit/warp.hpp"

namespace {

using nlohmann::json;

int RunSynth(int count, std::uint64_t seed, const std::string& out_dir,
             bool distort) {
  std::filesystem::create_directories(out_dir);
  meterkit::SpecConstraints constraints;
  constraints.distort = distort;
  for (int i = 0; i < count; ++i) {
    const auto spec = meterkit::RandomSpec(seed + static_cast<std::uint64_t>(i),
                                           constraints);
    const auto scene = meterkit::Render(spec);
    std::ostringstream name;
    name << out_dir << "/scene_" << std::setw(4) << std::setfill('0') << i;
    meterkit::WriteScene(scene, name.str());
  }
  return 0;
}

int RunAlign(const std::string& in_path, const std::string& offsets_path,
             const std::string& out_path) {
  const auto img = meterkit::LoadImage(in_path);
  const auto offsets = meterkit::OffsetsFromJson(
      json::parse(meterkit::ReadTextFile(offsets_path)));
  const auto h =
      meterkit::OffsetsToHomography(img.width(), img.height(), offsets);
  const auto aligned = meterkit::WarpImage(img, meterkit::Inverse(h),
                                           img.width(), img.height());
  meterkit::SaveImage(aligned, out_path);
  return 0;
}

int RunRead(const std::string& basename, const std::string& config_path,
            const std::string& probs_path) {
  meterkit::PipelineConfig cfg;
  if (!config_path.empty()) {
    cfg = meterkit::ConfigFromJson(
        json::parse(meterkit::ReadTextFile(config_path)));
  }
  auto scene = meterkit::LoadScene(basename);
  if (!probs_path.empty()) {
    scene.number_probs = meterkit::ProbMatrixFromJson(
        json::parse(meterkit::ReadTextFile(probs_path)));
  }
  const auto result = meterkit::RunScene(scene, cfg);
  std::cout << meterkit::ToJson(result).dump(2) << "\n";
  return 0;
}

int RunEval(const std::string& pred_path, const std::string& out_path) {
  std::istringstream lines(meterkit::ReadTextFile(pred_path));
  std::vector<meterkit::EvalRecord> records;
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(meterkit::EvalRecordFromJson(json::parse(line)));
  }
  const json out{{"rel_percent", meterkit::AvgRelativeError(records)},
                 {"ref_percent", meterkit::AvgReferenceError(records)},
                 {"n", records.size()}};
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) meterkit::WriteTextFile(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointer-meter reading toolkit"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "Generate synthetic meter scenes");
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool distort = false;
  synth->add_option("--count", count, "Number of scenes")->check(CLI::PositiveNumber);
  synth->add_option("--seed", seed, "Base random seed");
  synth->add_option("--out", out_dir, "Output directory")->required();
  synth->add_flag("--distort", distort, "Apply a random homography distortion");

  auto* align = app.add_subcommand("align", "Warp an image by corner offsets");
  std::string align_in, align_offsets, align_out;
  align->add_option("--in", align_in, "Input image")->required();
  align->add_option("--offsets", align_offsets, "Corner offsets JSON")->required();
  align->add_option("--out", align_out, "Output image")->required();

  auto* read = app.add_subcommand("read", "Read a meter scene");
  std::string read_scene, read_config, read_probs;
  read->add_option("--scene", read_scene, "Scene basename (DIR/basename)")->required();
  read->add_option("--config", read_config, "Pipeline config JSON");
  read->add_option("--probs", read_probs, "Recognition probability matrix JSON");

  auto* eval = app.add_subcommand("eval", "Aggregate reading error metrics");
  std::string eval_pred, eval_out;
  eval->add_option("--pred", eval_pred, "JSONL of prediction records")->required();
  eval->add_option("--out", eval_out, "Output JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (synth->parsed()) return RunSynth(count, seed, out_dir, distort);
    if (align->parsed()) return RunAlign(align_in, align_offsets, align_out);
    if (read->parsed()) return RunRead(read_scene, read_config, read_probs);
    if (eval->parsed()) return RunEval(eval_pred, eval_out);
  } catch (const meterkit::Error& e) {
    std::cerr << "error (" << meterkit::ErrorKindName(e.kind()) << "): "
              << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return 2;
  }
  return 1;
}
