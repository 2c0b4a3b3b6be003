#include "meterkit/serialize.hpp"

#include <fstream>
#include <sstream>

namespace meterkit {

using nlohmann::json;

json ToJson(const Point2& p) { return json{{"x", p.x}, {"y", p.y}}; }

Point2 PointFromJson(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>()};
}

json ToJson(const Homography& h) {
  return json{{"h", h.m}};
}

Homography HomographyFromJson(const json& j) {
  Homography h;
  const auto& arr = j.at("h");
  if (arr.size() != 9) {
    throw Error(ErrorKind::kCorruptData, "homography needs 9 entries");
  }
  for (int i = 0; i < 9; ++i) h.m[i] = arr[i].get<double>();
  return Canonical(h);
}

json ToJson(const QuadOffsets& d) {
  json arr = json::array();
  for (const auto& p : d.d) arr.push_back(json::array({p.x, p.y}));
  return json{{"d", arr}};
}

QuadOffsets OffsetsFromJson(const json& j) {
  const auto& arr = j.at("d");
  if (arr.size() != 4) {
    throw Error(ErrorKind::kCorruptData, "offsets need 4 corner pairs");
  }
  QuadOffsets d;
  for (int i = 0; i < 4; ++i) {
    d.d[i] = {arr[i].at(0).get<double>(), arr[i].at(1).get<double>()};
  }
  return d;
}

json ToJson(const ReadingResult& r) {
  return json{{"value", r.value},
              {"alpha1", r.alpha1},
              {"alpha2", r.alpha2},
              {"num_rec", r.num_rec},
              {"pointer", {{"rho", r.pointer.rho}, {"theta", r.pointer.theta}}},
              {"zero_scale", ToJson(r.zero_scale)},
              {"key_scale", ToJson(r.key_scale)}};
}

ReadingResult ReadingResultFromJson(const json& j) {
  ReadingResult r;
  r.value = j.at("value").get<double>();
  r.alpha1 = j.at("alpha1").get<double>();
  r.alpha2 = j.at("alpha2").get<double>();
  r.num_rec = j.at("num_rec").get<double>();
  r.pointer = {j.at("pointer").at("rho").get<double>(),
               j.at("pointer").at("theta").get<double>()};
  r.zero_scale = PointFromJson(j.at("zero_scale"));
  r.key_scale = PointFromJson(j.at("key_scale"));
  return r;
}

json ToJson(const MeterAnnotation& a) {
  json corrs = json::array();
  for (const auto& c : a.correspondences) {
    corrs.push_back(json{{"src", ToJson(c.src)}, {"dst", ToJson(c.dst)}});
  }
  return json{{"dial_center", ToJson(a.dial_center)},
              {"zero_scale", ToJson(a.zero_scale)},
              {"key_scale", ToJson(a.key_scale)},
              {"pointer_angle", a.pointer_angle},
              {"key_number", a.key_number},
              {"true_reading", a.true_reading},
              {"correspondences", corrs},
              {"offsets", ToJson(a.offsets)},
              {"h_gt", ToJson(a.h_gt)}};
}

MeterAnnotation AnnotationFromJson(const json& j) {
  MeterAnnotation a;
  a.dial_center = PointFromJson(j.at("dial_center"));
  a.zero_scale = PointFromJson(j.at("zero_scale"));
  a.key_scale = PointFromJson(j.at("key_scale"));
  a.pointer_angle = j.at("pointer_angle").get<double>();
  a.key_number = j.at("key_number").get<std::string>();
  a.true_reading = j.at("true_reading").get<double>();
  const auto& corrs = j.at("correspondences");
  if (corrs.size() != 4) {
    throw Error(ErrorKind::kCorruptData, "annotation needs 4 correspondences");
  }
  for (int i = 0; i < 4; ++i) {
    a.correspondences[i] = {PointFromJson(corrs[i].at("src")),
                            PointFromJson(corrs[i].at("dst"))};
  }
  a.offsets = OffsetsFromJson(j.at("offsets"));
  a.h_gt = HomographyFromJson(j.at("h_gt"));
  return a;
}

json ToJson(const EvalRecord& r) {
  return json{{"predicted", r.predicted},
              {"ground_truth", r.ground_truth},
              {"range", r.range}};
}

EvalRecord EvalRecordFromJson(const json& j) {
  return {j.at("predicted").get<double>(), j.at("ground_truth").get<double>(),
          j.at("range").get<double>()};
}

json ToJson(const ProbMatrix& m) {
  json rows = json::array();
  for (int t = 0; t < m.timesteps(); ++t) {
    json row = json::array();
    for (int c = 0; c < m.classes(); ++c) row.push_back(m.at(t, c));
    rows.push_back(row);
  }
  return json{{"T", m.timesteps()}, {"C", m.classes()}, {"rows", rows}};
}

ProbMatrix ProbMatrixFromJson(const json& j) {
  const int t = j.at("T").get<int>();
  const int c = j.at("C").get<int>();
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != t) {
    throw Error(ErrorKind::kCorruptData, "row count does not match T");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(t) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw Error(ErrorKind::kCorruptData, "row length does not match C");
    }
    for (const auto& v : row) flat.push_back(v.get<double>());
  }
  return ProbMatrix(t, c, std::move(flat));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kFileNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kUnwritablePath, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorKind::kUnwritablePath, "write failed: " + path);
}

}  // namespace meterkit
