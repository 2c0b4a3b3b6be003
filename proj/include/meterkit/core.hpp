#ifndef METERKIT_CORE_HPP_
#define METERKIT_CORE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "meterkit/error.hpp"

namespace meterkit {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Dense row-major float raster, channel-interleaved, values in [0, 1].
// Integer coordinates name pixel centers; pixel (0, 0) is top-left.
class ImageBuffer {
 public:
  ImageBuffer(int width, int height, int channels);
  ImageBuffer(int width, int height, int channels, std::vector<float> data);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }

  float at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  void set(int x, int y, int c, float v) {
    data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c] = v;
  }

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

 private:
  int width_;
  int height_;
  int channels_;
  std::vector<float> data_;
};

// Single-channel probability raster in [0, 1].
class ScoreMap {
 public:
  explicit ScoreMap(ImageBuffer img);
  ScoreMap(int width, int height);

  int width() const { return img_.width(); }
  int height() const { return img_.height(); }
  float at(int x, int y) const { return img_.at(x, y, 0); }
  void set(int x, int y, float v) { img_.set(x, y, 0, v); }

  const ImageBuffer& image() const { return img_; }

 private:
  ImageBuffer img_;
};

class BinaryMask {
 public:
  BinaryMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool at(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, bool v) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = v;
  }
  std::size_t count() const;

  bool operator==(const BinaryMask& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<bool> bits_;
};

// Readers/writers for 8-bit PNG and NetPBM P2/P3/P5/P6. Values are scaled
// linearly between [0, maxval] storage and [0, 1] floats; quantization on
// save rounds half to even.
ImageBuffer LoadImage(const std::string& path);
void SaveImage(const ImageBuffer& img, const std::string& path);

}  // namespace meterkit

#endif  // METERKIT_CORE_HPP_
