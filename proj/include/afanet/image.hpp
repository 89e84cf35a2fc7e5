#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "afanet/common.hpp"
#include "afanet/tensor.hpp"

namespace afa {

// 8-bit interleaved image, row-major, channels innermost (PNG layout).
struct ImageU8 {
  int height = 0, width = 0, channels = 0;
  std::vector<std::uint8_t> data;

  ImageU8() = default;
  ImageU8(int h, int w, int c)
      : height(h), width(w), channels(c),
        data(static_cast<std::size_t>(h) * w * c, 0) {}

  std::uint8_t& at(int y, int x, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int y, int x, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  bool same_dims(const ImageU8& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }

  // One channel as a double plane for math.
  Eigen::ArrayXXd plane(int c) const {
    Eigen::ArrayXXd out(height, width);
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) out(y, x) = static_cast<double>(at(y, x, c));
    return out;
  }
};

// Raw single-channel integer map (depth in millimeters, or raw IR counts).
// Zero marks an invalid depth pixel (hole).
struct RawDepthMap {
  using Values = Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Values values;             // height x width
  std::uint32_t max_raw = (1u << 24) - 1;

  int height() const { return static_cast<int>(values.rows()); }
  int width() const { return static_cast<int>(values.cols()); }
};

// Net input scaling: 8-bit pixel -> [0, 1].
template <typename S>
void image_to_tensor(const ImageU8& img, Tensor4<S>& dst, int sample) {
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x)
        dst.at(sample, c, y, x) = static_cast<S>(img.at(y, x, c)) / S(255);
}

template <typename S>
ImageU8 tensor_to_image(const Tensor4<S>& t, int sample) {
  ImageU8 img(t.h, t.w, t.c);
  for (int c = 0; c < t.c; ++c)
    for (int y = 0; y < t.h; ++y)
      for (int x = 0; x < t.w; ++x)
        img.at(y, x, c) = clamp_u8(static_cast<double>(t.at(sample, c, y, x)) * 255.0);
  return img;
}

}  // namespace afa
