#include "afanet/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

namespace afa {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const char* what) {
  throw IoError(path + ": " + what);
}

}  // namespace

ImageU8 read_png_u8(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info) fail(path, "png alloc failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "png decode error");
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);

  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  int channels = png_get_channels(png, info);
  ImageU8 img(static_cast<int>(h), static_cast<int>(w), channels);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y)
    rows[y] = img.data.data() + static_cast<std::size_t>(y) * w * channels;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

RawDepthMap read_png_raw(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info) fail(path, "png alloc failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "png decode error");
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);
  if (color != PNG_COLOR_TYPE_GRAY) fail(path, "raw map must be single-channel gray");
  if (depth == 16) {
    png_set_swap(png);  // PNG stores big-endian 16-bit
  } else if (depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  png_read_update_info(png, info);

  RawDepthMap map;
  map.values.resize(h, w);
  map.max_raw = (depth == 16) ? 65535u : 255u;

  if (depth == 16) {
    std::vector<std::uint16_t> row(w);
    for (png_uint_32 y = 0; y < h; ++y) {
      png_read_row(png, reinterpret_cast<png_bytep>(row.data()), nullptr);
      for (png_uint_32 x = 0; x < w; ++x) map.values(y, x) = row[x];
    }
  } else {
    std::vector<std::uint8_t> row(w);
    for (png_uint_32 y = 0; y < h; ++y) {
      png_read_row(png, row.data(), nullptr);
      for (png_uint_32 x = 0; x < w; ++x) map.values(y, x) = row[x];
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return map;
}

void write_png_u8(const std::string& path, const ImageU8& img) {
  if (img.channels != 1 && img.channels != 3) fail(path, "channels must be 1 or 3");
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(path, "cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info) fail(path, "png alloc failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "png encode error");
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.width, img.height, 8,
               img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height; ++y)
    png_write_row(png, const_cast<png_bytep>(
                           img.data.data() + static_cast<std::size_t>(y) * img.width * img.channels));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace afa
