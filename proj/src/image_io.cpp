#include <png.h>

#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "meterkit/core.hpp"

namespace meterkit {
namespace {

// Round half to even, so quantization is reproducible across platforms.
std::uint8_t QuantizeByte(float v) {
  double scaled = static_cast<double>(v) * 255.0;
  double r = std::nearbyint(scaled);
  if (r < 0.0) r = 0.0;
  if (r > 255.0) r = 255.0;
  return static_cast<std::uint8_t>(r);
}

int ReadPnmToken(std::istream& in) {
  // Skips whitespace and '#' comments between tokens.
  while (true) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value = -1;
  in >> value;
  if (!in || value < 0) {
    throw Error(ErrorKind::kCorruptData, "malformed NetPBM header token");
  }
  return value;
}

ImageBuffer LoadPnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kFileNotFound, "cannot open " + path);

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P') {
    throw Error(ErrorKind::kUnsupportedFormat, "not a NetPBM file: " + path);
  }
  const char type = magic[1];
  if (type != '2' && type != '3' && type != '5' && type != '6') {
    throw Error(ErrorKind::kUnsupportedFormat,
                std::string("unsupported NetPBM type P") + type);
  }
  const bool color = (type == '3' || type == '6');
  const bool binary = (type == '5' || type == '6');
  const int channels = color ? 3 : 1;

  const int w = ReadPnmToken(in);
  const int h = ReadPnmToken(in);
  const int maxval = ReadPnmToken(in);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
    throw Error(ErrorKind::kCorruptData, "bad NetPBM dimensions in " + path);
  }

  const std::size_t n = static_cast<std::size_t>(w) * h * channels;
  std::vector<float> data(n);
  if (binary) {
    in.get();  // single whitespace after maxval
    std::vector<std::uint8_t> raw(n);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
      throw Error(ErrorKind::kCorruptData, "truncated NetPBM data in " + path);
    }
    for (std::size_t i = 0; i < n; ++i) {
      data[i] = static_cast<float>(raw[i]) / static_cast<float>(maxval);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int v = ReadPnmToken(in);
      if (v > maxval) {
        throw Error(ErrorKind::kCorruptData, "sample exceeds maxval in " + path);
      }
      data[i] = static_cast<float>(v) / static_cast<float>(maxval);
    }
  }
  return ImageBuffer(w, h, channels, std::move(data));
}

void SavePnm(const ImageBuffer& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kUnwritablePath, "cannot write " + path);
  const char type = img.channels() == 3 ? '6' : '5';
  out << 'P' << type << '\n' << img.width() << ' ' << img.height() << "\n255\n";
  std::vector<std::uint8_t> raw(img.data().size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = QuantizeByte(img.data()[i]);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw Error(ErrorKind::kUnwritablePath, "write failed: " + path);
}

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

ImageBuffer LoadPng(const std::string& path) {
  PngReadCloser ctx;
  ctx.fp = std::fopen(path.c_str(), "rb");
  if (!ctx.fp) throw Error(ErrorKind::kFileNotFound, "cannot open " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, ctx.fp) != 8 || png_sig_cmp(header, 0, 8)) {
    throw Error(ErrorKind::kUnsupportedFormat, "not a PNG file: " + path);
  }
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.png || !ctx.info) {
    throw Error(ErrorKind::kCorruptData, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw Error(ErrorKind::kCorruptData, "corrupt PNG data in " + path);
  }
  png_init_io(ctx.png, ctx.fp);
  png_set_sig_bytes(ctx.png, 8);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);

  if (bit_depth == 16) png_set_strip_16(ctx.png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(ctx.png);
  }
  if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(ctx.png);
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(ctx.png);
  png_read_update_info(ctx.png, ctx.info);

  const int channels = png_get_channels(ctx.png, ctx.info);
  if (channels != 1 && channels != 3) {
    throw Error(ErrorKind::kUnsupportedFormat, "unsupported PNG channel count");
  }
  const std::size_t stride = static_cast<std::size_t>(w) * channels;
  std::vector<std::uint8_t> raw(stride * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = raw.data() + y * stride;
  png_read_image(ctx.png, rows.data());

  std::vector<float> data(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    data[i] = static_cast<float>(raw[i]) / 255.0f;
  }
  return ImageBuffer(static_cast<int>(w), static_cast<int>(h), channels,
                     std::move(data));
}

void SavePng(const ImageBuffer& img, const std::string& path) {
  PngWriteCloser ctx;
  ctx.fp = std::fopen(path.c_str(), "wb");
  if (!ctx.fp) throw Error(ErrorKind::kUnwritablePath, "cannot write " + path);
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    nullptr);
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.png || !ctx.info) {
    throw Error(ErrorKind::kUnwritablePath, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw Error(ErrorKind::kUnwritablePath, "PNG write failed: " + path);
  }
  png_init_io(ctx.png, ctx.fp);
  png_set_IHDR(ctx.png, ctx.info, img.width(), img.height(), 8,
               img.channels() == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);

  const std::size_t stride =
      static_cast<std::size_t>(img.width()) * img.channels();
  std::vector<std::uint8_t> raw(img.data().size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = QuantizeByte(img.data()[i]);
  }
  for (int y = 0; y < img.height(); ++y) {
    png_write_row(ctx.png, raw.data() + static_cast<std::size_t>(y) * stride);
  }
  png_write_end(ctx.png, nullptr);
}

bool HasExtension(const std::string& path, const char* ext) {
  auto p = std::filesystem::path(path).extension().string();
  for (auto& c : p) c = static_cast<char>(std::tolower(c));
  return p == ext;
}

}  // namespace

ImageBuffer LoadImage(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kFileNotFound, "no such file: " + path);
  }
  if (HasExtension(path, ".png")) return LoadPng(path);
  if (HasExtension(path, ".pgm") || HasExtension(path, ".ppm") ||
      HasExtension(path, ".pnm")) {
    return LoadPnm(path);
  }
  throw Error(ErrorKind::kUnsupportedFormat, "unsupported extension: " + path);
}

void SaveImage(const ImageBuffer& img, const std::string& path) {
  if (HasExtension(path, ".png")) {
    SavePng(img, path);
  } else if (HasExtension(path, ".pgm") || HasExtension(path, ".ppm") ||
             HasExtension(path, ".pnm")) {
    SavePnm(img, path);
  } else {
    throw Error(ErrorKind::kUnsupportedFormat,
                "unsupported extension: " + path);
  }
}

}  // namespace meterkit
