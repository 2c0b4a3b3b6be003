#include "meterkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace meterkit {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFileNotFound: return "file_not_found";
    case ErrorKind::kUnsupportedFormat: return "unsupported_format";
    case ErrorKind::kCorruptData: return "corrupt_data";
    case ErrorKind::kUnwritablePath: return "unwritable_path";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kDegenerateConfiguration: return "degenerate_configuration";
    case ErrorKind::kSingularSystem: return "singular_system";
    case ErrorKind::kPointAtInfinity: return "point_at_infinity";
    case ErrorKind::kInsufficientPixels: return "insufficient_pixels";
    case ErrorKind::kEmptyPointer: return "empty_pointer";
    case ErrorKind::kInsufficientScales: return "insufficient_scales";
    case ErrorKind::kDegenerateRay: return "degenerate_ray";
    case ErrorKind::kZeroSpan: return "zero_span";
    case ErrorKind::kInfeasibleLabel: return "infeasible_label";
    case ErrorKind::kInstanceTooLarge: return "instance_too_large";
    case ErrorKind::kUnparseableNumber: return "unparseable_number";
  }
  return "unknown";
}

ImageBuffer::ImageBuffer(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels),
      data_(static_cast<std::size_t>(width) * height * channels, 0.0f) {
  if (width <= 0 || height <= 0 || (channels != 1 && channels != 3)) {
    throw Error(ErrorKind::kInvalidArgument, "bad image dimensions");
  }
}

ImageBuffer::ImageBuffer(int width, int height, int channels,
                         std::vector<float> data)
    : width_(width), height_(height), channels_(channels),
      data_(std::move(data)) {
  if (width <= 0 || height <= 0 || (channels != 1 && channels != 3)) {
    throw Error(ErrorKind::kInvalidArgument, "bad image dimensions");
  }
  if (data_.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(ErrorKind::kDimensionMismatch, "data length mismatch");
  }
  for (float v : data_) {
    if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
      throw Error(ErrorKind::kInvalidArgument, "pixel value outside [0,1]");
    }
  }
}

ScoreMap::ScoreMap(ImageBuffer img) : img_(std::move(img)) {
  if (img_.channels() != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "score map requires a single-channel image");
  }
}

ScoreMap::ScoreMap(int width, int height) : img_(width, height, 1) {}

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height),
      bits_(static_cast<std::size_t>(width) * height, false) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "bad mask dimensions");
  }
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

}  // namespace meterkit
