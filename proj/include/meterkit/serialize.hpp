#ifndef METERKIT_SERIALIZE_HPP_
#define METERKIT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "meterkit/ctc.hpp"
#include "meterkit/geometry.hpp"
#include "meterkit/metrics.hpp"
#include "meterkit/reading.hpp"
#include "meterkit/synthmeter.hpp"

namespace meterkit {

nlohmann::json ToJson(const Point2& p);
Point2 PointFromJson(const nlohmann::json& j);

// Nine row-major numbers under key "h".
nlohmann::json ToJson(const Homography& h);
Homography HomographyFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const QuadOffsets& d);
QuadOffsets OffsetsFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const ReadingResult& r);
ReadingResult ReadingResultFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const MeterAnnotation& a);
MeterAnnotation AnnotationFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const EvalRecord& r);
EvalRecord EvalRecordFromJson(const nlohmann::json& j);

// {"T": .., "C": .., "rows": [[..], ..]}
nlohmann::json ToJson(const ProbMatrix& m);
ProbMatrix ProbMatrixFromJson(const nlohmann::json& j);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace meterkit

#endif  // METERKIT_SERIALIZE_HPP_
