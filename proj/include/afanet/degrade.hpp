#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>

#include "afanet/common.hpp"
#include "afanet/image.hpp"

namespace afa {

// Surveillance-style degradation: bilinear downsample plus Gaussian blur.
struct DegradeSpec {
  int target_resolution = 16;  // square
  bool blur_enabled = false;
  int kernel_size = 3;
  double sigma = 1.5;
};

struct QualityScore {
  double psnr_db = 0.0;  // +inf for identical inputs
  double ssim = 0.0;
};

// Isotropic Gaussian sampled at integer offsets from the center, normalized
// to sum 1.
inline Eigen::ArrayXXd gaussian_kernel(int size, double sigma) {
  require(size >= 1 && size % 2 == 1, "gaussian_kernel: size must be odd and >= 1");
  require(sigma > 0.0, "gaussian_kernel: sigma must be positive");
  Eigen::ArrayXXd k(size, size);
  int r = size / 2;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      double dy = y - r, dx = x - r;
      k(y, x) = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    }
  return k / k.sum();
}

namespace detail {

// Half-pixel-center bilinear sampling, border clamped.
inline Eigen::ArrayXXd resize_bilinear_plane(const Eigen::ArrayXXd& src, int out_h, int out_w) {
  int in_h = static_cast<int>(src.rows()), in_w = static_cast<int>(src.cols());
  Eigen::ArrayXXd out(out_h, out_w);
  double sy = static_cast<double>(in_h) / out_h;
  double sx = static_cast<double>(in_w) / out_w;
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    int y0 = static_cast<int>(std::floor(fy));
    double wy = fy - y0;
    int y0c = std::clamp(y0, 0, in_h - 1), y1c = std::clamp(y0 + 1, 0, in_h - 1);
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      int x0 = static_cast<int>(std::floor(fx));
      double wx = fx - x0;
      int x0c = std::clamp(x0, 0, in_w - 1), x1c = std::clamp(x0 + 1, 0, in_w - 1);
      out(y, x) = (1 - wy) * ((1 - wx) * src(y0c, x0c) + wx * src(y0c, x1c)) +
                  wy * ((1 - wx) * src(y1c, x0c) + wx * src(y1c, x1c));
    }
  }
  return out;
}

// Edge-replicate padding; avoids dark halos on tiny crops.
inline Eigen::ArrayXXd convolve_replicate(const Eigen::ArrayXXd& src,
                                          const Eigen::ArrayXXd& kernel) {
  int h = static_cast<int>(src.rows()), w = static_cast<int>(src.cols());
  int r = static_cast<int>(kernel.rows()) / 2;
  Eigen::ArrayXXd out(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int ky = -r; ky <= r; ++ky)
        for (int kx = -r; kx <= r; ++kx) {
          int yy = std::clamp(y + ky, 0, h - 1);
          int xx = std::clamp(x + kx, 0, w - 1);
          acc += kernel(ky + r, kx + r) * src(yy, xx);
        }
      out(y, x) = acc;
    }
  return out;
}

}  // namespace detail

inline ImageU8 resize_bilinear(const ImageU8& img, int out_h, int out_w) {
  require(img.height >= 1 && img.width >= 1, "resize_bilinear: empty image");
  ImageU8 out(out_h, out_w, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    Eigen::ArrayXXd plane = detail::resize_bilinear_plane(img.plane(c), out_h, out_w);
    for (int y = 0; y < out_h; ++y)
      for (int x = 0; x < out_w; ++x) out.at(y, x, c) = clamp_u8(plane(y, x));
  }
  return out;
}

// Resize first, then blur; rounded to 8-bit once at the end.
inline ImageU8 degrade(const ImageU8& img, const DegradeSpec& spec) {
  require(img.height >= 1 && img.width >= 1, "degrade: empty image");
  require(spec.target_resolution >= 1, "degrade: target_resolution must be >= 1");
  Eigen::ArrayXXd kernel;
  if (spec.blur_enabled) kernel = gaussian_kernel(spec.kernel_size, spec.sigma);

  ImageU8 out(spec.target_resolution, spec.target_resolution, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    Eigen::ArrayXXd plane = detail::resize_bilinear_plane(img.plane(c), spec.target_resolution,
                                                          spec.target_resolution);
    if (spec.blur_enabled) plane = detail::convolve_replicate(plane, kernel);
    for (int y = 0; y < spec.target_resolution; ++y)
      for (int x = 0; x < spec.target_resolution; ++x) out.at(y, x, c) = clamp_u8(plane(y, x));
  }
  return out;
}

inline double psnr(const ImageU8& reference, const ImageU8& test) {
  require(reference.same_dims(test), "psnr: dimension mismatch");
  double sse = 0.0;
  for (std::size_t i = 0; i < reference.data.size(); ++i) {
    double d = static_cast<double>(reference.data[i]) - static_cast<double>(test.data[i]);
    sse += d * d;
  }
  double mse = sse / static_cast<double>(reference.data.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

// Mean local SSIM over 8x8 uniform sliding windows (stride 1), the standard
// stabilizers C1 = (0.01*255)^2 and C2 = (0.03*255)^2, biased moments.
// Multi-channel images score each channel and average.
inline double ssim(const ImageU8& reference, const ImageU8& test) {
  require(reference.same_dims(test), "ssim: dimension mismatch");
  require(reference.height >= 8 && reference.width >= 8, "ssim: image smaller than 8x8");
  constexpr int win = 8;
  constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);

  double total = 0.0;
  for (int c = 0; c < reference.channels; ++c) {
    Eigen::ArrayXXd a = reference.plane(c), b = test.plane(c);
    double acc = 0.0;
    int count = 0;
    for (int y = 0; y + win <= reference.height; ++y) {
      for (int x = 0; x + win <= reference.width; ++x) {
        auto wa = a.block(y, x, win, win);
        auto wb = b.block(y, x, win, win);
        double ma = wa.mean(), mb = wb.mean();
        double va = (wa - ma).square().mean();
        double vb = (wb - mb).square().mean();
        double cov = ((wa - ma) * (wb - mb)).mean();
        acc += ((2 * ma * mb + c1) * (2 * cov + c2)) /
               ((ma * ma + mb * mb + c1) * (va + vb + c2));
        ++count;
      }
    }
    total += acc / count;
  }
  return total / reference.channels;
}

inline QualityScore quality(const ImageU8& reference, const ImageU8& test) {
  return QualityScore{psnr(reference, test), ssim(reference, test)};
}

}  // namespace afa
