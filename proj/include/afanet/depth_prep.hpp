#pragma once

#include <algorithm>
#include <cstdint>

#include "afanet/common.hpp"
#include "afanet/image.hpp"

namespace afa {

// Axis-aligned face box from an external detector, in pixels.
struct FaceBox {
  int x = 0, y = 0, w = 0, h = 0;

  bool operator==(const FaceBox&) const = default;
  bool inside(int img_h, int img_w) const {
    return x >= 0 && y >= 0 && w > 0 && h > 0 && x + w <= img_w && y + h <= img_h;
  }
};

// Face-region depth statistics over strictly nonzero pixels, in millimeters.
struct DepthStats {
  double mean = 0.0;
  std::uint32_t minimum = 0;
  std::uint32_t maximum = 0;
};

// Normalized single-channel 8-bit map.
struct NormalizedDepthMap {
  ImageU8 image;  // channels == 1
};

// Grow the box by `factor` about its center, then clip to the image.
// The pre-clip size is round(factor * w) x round(factor * h).
inline FaceBox expand_bbox(const FaceBox& box, double factor, int img_h, int img_w) {
  require(factor >= 1.0, "expand_bbox: factor must be >= 1.0");
  require(box.w > 0 && box.h > 0, "expand_bbox: degenerate box");
  require(box.inside(img_h, img_w), "expand_bbox: box outside image");

  double cx = box.x + box.w / 2.0;
  double cy = box.y + box.h / 2.0;
  double nw = factor * box.w;
  double nh = factor * box.h;
  int x0 = round_half_up(cx - nw / 2.0);
  int y0 = round_half_up(cy - nh / 2.0);
  int x1 = round_half_up(cx + nw / 2.0);
  int y1 = round_half_up(cy + nh / 2.0);
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, img_w);
  y1 = std::min(y1, img_h);
  return FaceBox{x0, y0, x1 - x0, y1 - y0};
}

// Mean/min/max over nonzero pixels inside the face box. Zeros are holes and
// never contribute. Throws EmptyFaceDepth when every face pixel is a hole.
inline DepthStats face_depth_stats(const RawDepthMap& depth, const FaceBox& face) {
  require(face.inside(depth.height(), depth.width()), "face_depth_stats: box outside image");
  double sum = 0.0;
  std::int64_t count = 0;
  std::uint32_t mn = 0, mx = 0;
  for (int y = face.y; y < face.y + face.h; ++y) {
    for (int x = face.x; x < face.x + face.w; ++x) {
      std::uint32_t v = depth.values(y, x);
      if (v == 0) continue;
      if (count == 0) {
        mn = mx = v;
      } else {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      sum += v;
      ++count;
    }
  }
  if (count == 0) throw EmptyFaceDepth("face_depth_stats: no nonzero depth in face box");
  return DepthStats{sum / static_cast<double>(count), mn, mx};
}

namespace detail {

// Clamp to [lo, hi] then map the window linearly onto [0, 255], half-up.
// A degenerate window maps everything to mid-gray.
inline std::uint8_t window_map(double v, double lo, double hi) {
  if (hi <= lo) return 128;
  v = std::clamp(v, lo, hi);
  return clamp_u8(255.0 * (v - lo) / (hi - lo));
}

inline NormalizedDepthMap normalize_with_window(const RawDepthMap& depth, const FaceBox& face,
                                                double win_lo, double win_hi, double fill_mean,
                                                double expansion) {
  FaceBox portrait = expand_bbox(face, expansion, depth.height(), depth.width());
  std::uint32_t fill = static_cast<std::uint32_t>(
      std::max(1, round_half_up(fill_mean)));  // holes become valid depth

  NormalizedDepthMap out;
  out.image = ImageU8(depth.height(), depth.width(), 1);
  for (int y = 0; y < depth.height(); ++y) {
    for (int x = 0; x < depth.width(); ++x) {
      std::uint32_t v = depth.values(y, x);
      bool in_portrait = x >= portrait.x && x < portrait.x + portrait.w && y >= portrait.y &&
                         y < portrait.y + portrait.h;
      if (v == 0 && in_portrait) v = fill;
      out.image.at(y, x) = window_map(static_cast<double>(v), win_lo, win_hi);
    }
  }
  return out;
}

}  // namespace detail

// Window = [face min, face max]; stats are taken before hole filling, holes
// inside the 1.3x portrait box become the face mean.
inline NormalizedDepthMap normalize_depth_alg1(const RawDepthMap& depth, const FaceBox& face,
                                               double expansion = 1.3) {
  DepthStats st = face_depth_stats(depth, face);
  return detail::normalize_with_window(depth, face, static_cast<double>(st.minimum),
                                       static_cast<double>(st.maximum), st.mean, expansion);
}

// Fixed +-50 mm window about the face mean; hole filling as in algorithm one.
inline NormalizedDepthMap normalize_depth_alg2(const RawDepthMap& depth, const FaceBox& face,
                                               double expansion = 1.3) {
  DepthStats st = face_depth_stats(depth, face);
  return detail::normalize_with_window(depth, face, st.mean - 50.0, st.mean + 50.0, st.mean,
                                       expansion);
}

// Uniform quantization for IR: v -> floor(v * 256 / (max_raw + 1)).
inline ImageU8 quantize_ir_uniform(const RawDepthMap& ir) {
  ImageU8 out(ir.height(), ir.width(), 1);
  double denom = static_cast<double>(ir.max_raw) + 1.0;
  for (int y = 0; y < ir.height(); ++y) {
    for (int x = 0; x < ir.width(); ++x) {
      std::uint32_t v = ir.values(y, x);
      require(v <= ir.max_raw, "quantize_ir_uniform: value exceeds max_raw");
      int q = static_cast<int>(std::floor(static_cast<double>(v) * 256.0 / denom));
      out.at(y, x) = static_cast<std::uint8_t>(std::min(q, 255));
    }
  }
  return out;
}

inline ImageU8 crop(const ImageU8& img, const FaceBox& box) {
  ImageU8 out(box.h, box.w, img.channels);
  for (int y = 0; y < box.h; ++y)
    for (int x = 0; x < box.w; ++x)
      for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(box.y + y, box.x + x, c);
  return out;
}

struct MultiModalCrops {
  ImageU8 rgb, depth, ir;
  FaceBox region;  // the expanded, clipped box all three share
};

// All three modalities are pre-aligned; one expanded box crops them all.
inline MultiModalCrops crop_multimodal(const ImageU8& rgb, const ImageU8& depth_norm,
                                       const ImageU8& ir_8bit, const FaceBox& face,
                                       double factor = 1.3) {
  require(rgb.height == depth_norm.height && rgb.width == depth_norm.width &&
              rgb.height == ir_8bit.height && rgb.width == ir_8bit.width,
          "crop_multimodal: modality dimensions are not aligned");
  FaceBox region = expand_bbox(face, factor, rgb.height, rgb.width);
  return MultiModalCrops{crop(rgb, region), crop(depth_norm, region), crop(ir_8bit, region),
                         region};
}

}  // namespace afa
