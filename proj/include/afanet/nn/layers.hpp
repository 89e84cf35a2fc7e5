#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "afanet/rng.hpp"
#include "afanet/tensor.hpp"

namespace afa::nn {

// Trainable parameters are flat arrays plus a shape; layers map them into
// matrices as needed. Stable names come from collect() prefixes.
template <typename S>
struct ParamView {
  std::string name;
  ArrayX<S>* value;
  ArrayX<S>* grad;
  std::vector<int> shape;
};

// Non-trainable state that still belongs in a checkpoint (batchnorm stats).
template <typename S>
struct BufferView {
  std::string name;
  ArrayX<S>* value;
};

template <typename S>
using ParamList = std::vector<ParamView<S>>;
template <typename S>
using BufferList = std::vector<BufferView<S>>;

template <typename S>
using RowMajorMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using RowMajorMap = Eigen::Map<RowMajorMatrix<S>>;
template <typename S>
using ConstRowMajorMap = Eigen::Map<const RowMajorMatrix<S>>;

// ---------------------------------------------------------------------------
// Conv2d: grouped, strided, zero-padded; im2col + GEMM.
// Weight shape [out_ch, in_ch/groups, k, k], flattened row-major.
// ---------------------------------------------------------------------------
template <typename S>
class Conv2d {
 public:
  Conv2d() = default;
  Conv2d(int in_ch, int out_ch, int kernel, int stride = 1, int pad = 0, int groups = 1)
      : in_ch_(in_ch), out_ch_(out_ch), k_(kernel), stride_(stride), pad_(pad), groups_(groups) {
    require(in_ch % groups == 0 && out_ch % groups == 0, "Conv2d: groups must divide channels");
    kcols_ = (in_ch_ / groups_) * k_ * k_;
    w_ = ArrayX<S>::Zero(static_cast<Eigen::Index>(out_ch_) * kcols_);
    b_ = ArrayX<S>::Zero(out_ch_);
    gw_ = ArrayX<S>::Zero(w_.size());
    gb_ = ArrayX<S>::Zero(b_.size());
  }

  void init(Rng& rng) {
    double std = std::sqrt(2.0 / kcols_);
    for (Eigen::Index i = 0; i < w_.size(); ++i) w_[i] = static_cast<S>(rng.normal() * std);
    b_.setZero();
  }

  int out_size(int in) const { return (in + 2 * pad_ - k_) / stride_ + 1; }
  int in_channels() const { return in_ch_; }
  int out_channels() const { return out_ch_; }
  int groups() const { return groups_; }

  Tensor4<S> forward(const Tensor4<S>& x) {
    require(x.c == in_ch_, "Conv2d: channel mismatch");
    x_cache_ = x;
    int ho = out_size(x.h), wo = out_size(x.w);
    Tensor4<S> out(x.n, out_ch_, ho, wo);
    int in_pg = in_ch_ / groups_, out_pg = out_ch_ / groups_;
    Eigen::Index m = static_cast<Eigen::Index>(x.n) * ho * wo;
    MatrixX<S> col(kcols_, m);
    RowMajorMatrix<S> y(out_pg, m);
    for (int g = 0; g < groups_; ++g) {
      im2col(x, g, ho, wo, col);
      ConstRowMajorMap<S> wg(w_.data() + static_cast<Eigen::Index>(g) * out_pg * kcols_, out_pg,
                             kcols_);
      y.noalias() = wg * col;
      for (int oc = 0; oc < out_pg; ++oc) {
        int oc_full = g * out_pg + oc;
        for (int n = 0; n < x.n; ++n)
          std::memcpy(out.plane_ptr(n, oc_full), y.data() + (static_cast<Eigen::Index>(oc) * m) +
                                                     static_cast<Eigen::Index>(n) * ho * wo,
                      sizeof(S) * ho * wo);
        out.plane(0, 0);  // no-op; keeps maps in scope readable
      }
      for (int oc = 0; oc < out_pg; ++oc) {
        int oc_full = g * out_pg + oc;
        for (int n = 0; n < x.n; ++n) out.plane(n, oc_full) += b_[oc_full];
      }
    }
    return out;
  }

  // Accumulates parameter grads, returns grad w.r.t. input.
  Tensor4<S> backward(const Tensor4<S>& gout) {
    const Tensor4<S>& x = x_cache_;
    int ho = gout.h, wo = gout.w;
    int in_pg = in_ch_ / groups_, out_pg = out_ch_ / groups_;
    Eigen::Index m = static_cast<Eigen::Index>(x.n) * ho * wo;
    MatrixX<S> col(kcols_, m);
    RowMajorMatrix<S> gy(out_pg, m);
    MatrixX<S> gcol(kcols_, m);
    Tensor4<S> gx(x.n, x.c, x.h, x.w);
    for (int g = 0; g < groups_; ++g) {
      im2col(x, g, ho, wo, col);
      for (int oc = 0; oc < out_pg; ++oc) {
        int oc_full = g * out_pg + oc;
        for (int n = 0; n < x.n; ++n)
          std::memcpy(gy.data() + static_cast<Eigen::Index>(oc) * m +
                          static_cast<Eigen::Index>(n) * ho * wo,
                      gout.plane_ptr(n, oc_full), sizeof(S) * ho * wo);
      }
      RowMajorMap<S> gwg(gw_.data() + static_cast<Eigen::Index>(g) * out_pg * kcols_, out_pg,
                         kcols_);
      gwg.noalias() += gy * col.transpose();
      for (int oc = 0; oc < out_pg; ++oc) gb_[g * out_pg + oc] += gy.row(oc).sum();
      ConstRowMajorMap<S> wg(w_.data() + static_cast<Eigen::Index>(g) * out_pg * kcols_, out_pg,
                             kcols_);
      gcol.noalias() = wg.transpose() * gy;
      col2im_add(gcol, g, ho, wo, gx);
    }
    return gx;
  }

  void collect(const std::string& prefix, ParamList<S>& out) {
    out.push_back({prefix + ".weight", &w_, &gw_, {out_ch_, in_ch_ / groups_, k_, k_}});
    out.push_back({prefix + ".bias", &b_, &gb_, {out_ch_}});
  }
  void collect_buffers(const std::string&, BufferList<S>&) {}

  ArrayX<S>& weight() { return w_; }
  ArrayX<S>& bias() { return b_; }
  int kernel() const { return k_; }

 private:
  void im2col(const Tensor4<S>& x, int g, int ho, int wo, MatrixX<S>& col) const {
    int in_pg = in_ch_ / groups_;
    for (int n = 0; n < x.n; ++n) {
      for (int oy = 0; oy < ho; ++oy) {
        for (int ox = 0; ox < wo; ++ox) {
          Eigen::Index mcol = (static_cast<Eigen::Index>(n) * ho + oy) * wo + ox;
          S* dst = col.data() + mcol * kcols_;
          int r = 0;
          for (int ic = 0; ic < in_pg; ++ic) {
            const S* src = x.plane_ptr(n, g * in_pg + ic);
            for (int ky = 0; ky < k_; ++ky) {
              int iy = oy * stride_ - pad_ + ky;
              for (int kx = 0; kx < k_; ++kx, ++r) {
                int ix = ox * stride_ - pad_ + kx;
                dst[r] = (iy >= 0 && iy < x.h && ix >= 0 && ix < x.w)
                             ? src[static_cast<Eigen::Index>(iy) * x.w + ix]
                             : S(0);
              }
            }
          }
        }
      }
    }
  }

  void col2im_add(const MatrixX<S>& gcol, int g, int ho, int wo, Tensor4<S>& gx) const {
    int in_pg = in_ch_ / groups_;
    for (int n = 0; n < gx.n; ++n) {
      for (int oy = 0; oy < ho; ++oy) {
        for (int ox = 0; ox < wo; ++ox) {
          Eigen::Index mcol = (static_cast<Eigen::Index>(n) * ho + oy) * wo + ox;
          const S* src = gcol.data() + mcol * kcols_;
          int r = 0;
          for (int ic = 0; ic < in_pg; ++ic) {
            S* dst = gx.plane_ptr(n, g * in_pg + ic);
            for (int ky = 0; ky < k_; ++ky) {
              int iy = oy * stride_ - pad_ + ky;
              for (int kx = 0; kx < k_; ++kx, ++r) {
                int ix = ox * stride_ - pad_ + kx;
                if (iy >= 0 && iy < gx.h && ix >= 0 && ix < gx.w)
                  dst[static_cast<Eigen::Index>(iy) * gx.w + ix] += src[r];
              }
            }
          }
        }
      }
    }
  }

  int in_ch_ = 0, out_ch_ = 0, k_ = 0, stride_ = 1, pad_ = 0, groups_ = 1;
  Eigen::Index kcols_ = 0;
  ArrayX<S> w_, b_, gw_, gb_;
  Tensor4<S> x_cache_;
};

// ---------------------------------------------------------------------------
// ConvTranspose2d: exact-2x upsampling flavor (kernel 4, stride 2, pad 1) or
// any (k, s, p). Weight shape [in_ch, out_ch, k, k].
// ---------------------------------------------------------------------------
template <typename S>
class ConvTranspose2d {
 public:
  ConvTranspose2d() = default;
  ConvTranspose2d(int in_ch, int out_ch, int kernel, int stride, int pad)
      : in_ch_(in_ch), out_ch_(out_ch), k_(kernel), stride_(stride), pad_(pad) {
    w_ = ArrayX<S>::Zero(static_cast<Eigen::Index>(in_ch_) * out_ch_ * k_ * k_);
    b_ = ArrayX<S>::Zero(out_ch_);
    gw_ = ArrayX<S>::Zero(w_.size());
    gb_ = ArrayX<S>::Zero(b_.size());
  }

  void init(Rng& rng) {
    double std = std::sqrt(2.0 / (static_cast<double>(in_ch_) * k_ * k_));
    for (Eigen::Index i = 0; i < w_.size(); ++i) w_[i] = static_cast<S>(rng.normal() * std);
    b_.setZero();
  }

  int out_size(int in) const { return (in - 1) * stride_ - 2 * pad_ + k_; }

  Tensor4<S> forward(const Tensor4<S>& x) {
    require(x.c == in_ch_, "ConvTranspose2d: channel mismatch");
    x_cache_ = x;
    int ho = out_size(x.h), wo = out_size(x.w);
    Tensor4<S> out(x.n, out_ch_, ho, wo);
    for (int n = 0; n < x.n; ++n) {
      for (int oc = 0; oc < out_ch_; ++oc) out.plane(n, oc) = b_[oc];
      for (int ic = 0; ic < in_ch_; ++ic) {
        const S* xp = x.plane_ptr(n, ic);
        for (int iy = 0; iy < x.h; ++iy) {
          for (int ix = 0; ix < x.w; ++ix) {
            S v = xp[static_cast<Eigen::Index>(iy) * x.w + ix];
            for (int oc = 0; oc < out_ch_; ++oc) {
              S* op = out.plane_ptr(n, oc);
              const S* wp = wptr(ic, oc);
              for (int ky = 0; ky < k_; ++ky) {
                int oy = iy * stride_ - pad_ + ky;
                if (oy < 0 || oy >= ho) continue;
                for (int kx = 0; kx < k_; ++kx) {
                  int ox = ix * stride_ - pad_ + kx;
                  if (ox < 0 || ox >= wo) continue;
                  op[static_cast<Eigen::Index>(oy) * wo + ox] += v * wp[ky * k_ + kx];
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  Tensor4<S> backward(const Tensor4<S>& gout) {
    const Tensor4<S>& x = x_cache_;
    int ho = gout.h, wo = gout.w;
    Tensor4<S> gx(x.n, x.c, x.h, x.w);
    for (int oc = 0; oc < out_ch_; ++oc) {
      S acc = 0;
      for (int n = 0; n < x.n; ++n) acc += gout.plane(n, oc).sum();
      gb_[oc] += acc;
    }
    for (int n = 0; n < x.n; ++n) {
      for (int ic = 0; ic < in_ch_; ++ic) {
        const S* xp = x.plane_ptr(n, ic);
        S* gxp = gx.plane_ptr(n, ic);
        for (int iy = 0; iy < x.h; ++iy) {
          for (int ix = 0; ix < x.w; ++ix) {
            S v = xp[static_cast<Eigen::Index>(iy) * x.w + ix];
            S acc = 0;
            for (int oc = 0; oc < out_ch_; ++oc) {
              const S* gp = gout.plane_ptr(n, oc);
              const S* wp = wptr(ic, oc);
              S* gwp = gwptr(ic, oc);
              for (int ky = 0; ky < k_; ++ky) {
                int oy = iy * stride_ - pad_ + ky;
                if (oy < 0 || oy >= ho) continue;
                for (int kx = 0; kx < k_; ++kx) {
                  int ox = ix * stride_ - pad_ + kx;
                  if (ox < 0 || ox >= wo) continue;
                  S g = gp[static_cast<Eigen::Index>(oy) * wo + ox];
                  acc += g * wp[ky * k_ + kx];
                  gwp[ky * k_ + kx] += g * v;
                }
              }
            }
            gxp[static_cast<Eigen::Index>(iy) * x.w + ix] = acc;
          }
        }
      }
    }
    return gx;
  }

  void collect(const std::string& prefix, ParamList<S>& out) {
    out.push_back({prefix + ".weight", &w_, &gw_, {in_ch_, out_ch_, k_, k_}});
    out.push_back({prefix + ".bias", &b_, &gb_, {out_ch_}});
  }
  void collect_buffers(const std::string&, BufferList<S>&) {}

  ArrayX<S>& weight() { return w_; }

 private:
  const S* wptr(int ic, int oc) const {
    return w_.data() + (static_cast<Eigen::Index>(ic) * out_ch_ + oc) * k_ * k_;
  }
  S* gwptr(int ic, int oc) {
    return gw_.data() + (static_cast<Eigen::Index>(ic) * out_ch_ + oc) * k_ * k_;
  }

  int in_ch_ = 0, out_ch_ = 0, k_ = 0, stride_ = 1, pad_ = 0;
  ArrayX<S> w_, b_, gw_, gb_;
  Tensor4<S> x_cache_;
};

// ---------------------------------------------------------------------------
// BatchNorm2d. Train mode uses biased batch moments and keeps running stats
// (unbiased variance, momentum 0.1); eval mode is a frozen affine map.
// ---------------------------------------------------------------------------
template <typename S>
class BatchNorm2d {
 public:
  BatchNorm2d() = default;
  explicit BatchNorm2d(int channels, double eps = 1e-5, double momentum = 0.1)
      : c_(channels), eps_(eps), momentum_(momentum) {
    gamma_ = ArrayX<S>::Ones(c_);
    beta_ = ArrayX<S>::Zero(c_);
    ggamma_ = ArrayX<S>::Zero(c_);
    gbeta_ = ArrayX<S>::Zero(c_);
    running_mean_ = ArrayX<S>::Zero(c_);
    running_var_ = ArrayX<S>::Ones(c_);
  }

  void init(Rng&) {
    gamma_.setOnes();
    beta_.setZero();
    running_mean_.setZero();
    running_var_.setOnes();
  }

  Tensor4<S> forward(const Tensor4<S>& x, bool train) {
    require(x.c == c_, "BatchNorm2d: channel mismatch");
    train_cached_ = train;
    Tensor4<S> out(x.n, x.c, x.h, x.w);
    Eigen::Index m = static_cast<Eigen::Index>(x.n) * x.h * x.w;
    if (train) {
      xhat_ = Tensor4<S>(x.n, x.c, x.h, x.w);
      inv_std_ = ArrayX<S>::Zero(c_);
      for (int c = 0; c < c_; ++c) {
        S mean = 0, var = 0;
        for (int n = 0; n < x.n; ++n) mean += x.plane(n, c).sum();
        mean /= static_cast<S>(m);
        for (int n = 0; n < x.n; ++n) var += (x.plane(n, c) - mean).square().sum();
        var /= static_cast<S>(m);
        S inv = S(1) / std::sqrt(var + static_cast<S>(eps_));
        inv_std_[c] = inv;
        for (int n = 0; n < x.n; ++n) {
          xhat_.plane(n, c) = (x.plane(n, c) - mean) * inv;
          out.plane(n, c) = xhat_.plane(n, c) * gamma_[c] + beta_[c];
        }
        S unbiased = (m > 1) ? var * static_cast<S>(m) / static_cast<S>(m - 1) : var;
        running_mean_[c] =
            static_cast<S>(1.0 - momentum_) * running_mean_[c] + static_cast<S>(momentum_) * mean;
        running_var_[c] = static_cast<S>(1.0 - momentum_) * running_var_[c] +
                          static_cast<S>(momentum_) * unbiased;
      }
    } else {
      for (int c = 0; c < c_; ++c) {
        S inv = S(1) / std::sqrt(running_var_[c] + static_cast<S>(eps_));
        S scale = gamma_[c] * inv;
        S shift = beta_[c] - running_mean_[c] * scale;
        for (int n = 0; n < x.n; ++n) out.plane(n, c) = x.plane(n, c) * scale + shift;
      }
    }
    return out;
  }

  Tensor4<S> backward(const Tensor4<S>& gout) {
    Tensor4<S> gx(gout.n, gout.c, gout.h, gout.w);
    Eigen::Index m = static_cast<Eigen::Index>(gout.n) * gout.h * gout.w;
    if (train_cached_) {
      for (int c = 0; c < c_; ++c) {
        S sum_g = 0, sum_gx = 0;
        for (int n = 0; n < gout.n; ++n) {
          sum_g += gout.plane(n, c).sum();
          sum_gx += (gout.plane(n, c) * xhat_.plane(n, c)).sum();
        }
        ggamma_[c] += sum_gx;
        gbeta_[c] += sum_g;
        S mean_g = sum_g / static_cast<S>(m);
        S mean_gx = sum_gx / static_cast<S>(m);
        S scale = gamma_[c] * inv_std_[c];
        for (int n = 0; n < gout.n; ++n)
          gx.plane(n, c) =
              scale * (gout.plane(n, c) - mean_g - xhat_.plane(n, c) * mean_gx);
      }
    } else {
      for (int c = 0; c < c_; ++c) {
        S scale = gamma_[c] / std::sqrt(running_var_[c] + static_cast<S>(eps_));
        for (int n = 0; n < gout.n; ++n) gx.plane(n, c) = gout.plane(n, c) * scale;
      }
    }
    return gx;
  }

  void collect(const std::string& prefix, ParamList<S>& out) {
    out.push_back({prefix + ".gamma", &gamma_, &ggamma_, {c_}});
    out.push_back({prefix + ".beta", &beta_, &gbeta_, {c_}});
  }
  void collect_buffers(const std::string& prefix, BufferList<S>& out) {
    out.push_back({prefix + ".running_mean", &running_mean_});
    out.push_back({prefix + ".running_var", &running_var_});
  }

  ArrayX<S>& gamma() { return gamma_; }
  ArrayX<S>& beta() { return beta_; }
  ArrayX<S>& running_mean() { return running_mean_; }
  ArrayX<S>& running_var() { return running_var_; }

 private:
  int c_ = 0;
  double eps_ = 1e-5, momentum_ = 0.1;
  bool train_cached_ = false;
  ArrayX<S> gamma_, beta_, ggamma_, gbeta_, running_mean_, running_var_;
  Tensor4<S> xhat_;
  ArrayX<S> inv_std_;
};

// ---------------------------------------------------------------------------
// Linear: y = x W^T + b, x is [N, in].
// ---------------------------------------------------------------------------
template <typename S>
class Linear {
 public:
  Linear() = default;
  Linear(int in, int out) : in_(in), out_(out) {
    w_ = ArrayX<S>::Zero(static_cast<Eigen::Index>(out) * in);
    b_ = ArrayX<S>::Zero(out);
    gw_ = ArrayX<S>::Zero(w_.size());
    gb_ = ArrayX<S>::Zero(b_.size());
  }

  void init(Rng& rng) {
    double std = std::sqrt(2.0 / in_);
    for (Eigen::Index i = 0; i < w_.size(); ++i) w_[i] = static_cast<S>(rng.normal() * std);
    b_.setZero();
  }

  MatrixX<S> forward(const MatrixX<S>& x) {
    require(x.cols() == in_, "Linear: input width mismatch");
    x_cache_ = x;
    ConstRowMajorMap<S> w(w_.data(), out_, in_);
    MatrixX<S> y = x * w.transpose();
    y.rowwise() += Eigen::Map<const VectorX<S>>(b_.data(), out_).transpose();
    return y;
  }

  MatrixX<S> backward(const MatrixX<S>& gy) {
    RowMajorMap<S> gw(gw_.data(), out_, in_);
    gw.noalias() += gy.transpose() * x_cache_;
    Eigen::Map<VectorX<S>>(gb_.data(), out_) += gy.colwise().sum().transpose();
    ConstRowMajorMap<S> w(w_.data(), out_, in_);
    return gy * w;
  }

  void collect(const std::string& prefix, ParamList<S>& out) {
    out.push_back({prefix + ".weight", &w_, &gw_, {out_, in_}});
    out.push_back({prefix + ".bias", &b_, &gb_, {out_}});
  }
  void collect_buffers(const std::string&, BufferList<S>&) {}

  ArrayX<S>& weight() { return w_; }
  ArrayX<S>& bias() { return b_; }

 private:
  int in_ = 0, out_ = 0;
  ArrayX<S> w_, b_, gw_, gb_;
  MatrixX<S> x_cache_;
};

// ---------------------------------------------------------------------------
// Stateless pieces with caches for backward.
// ---------------------------------------------------------------------------
template <typename S>
class Relu {
 public:
  Tensor4<S> forward(const Tensor4<S>& x) {
    mask_ = x;
    Tensor4<S> out = x;
    out.data = out.data.max(S(0));
    for (Eigen::Index i = 0; i < mask_.data.size(); ++i)
      mask_.data[i] = x.data[i] > S(0) ? S(1) : S(0);
    return out;
  }
  Tensor4<S> backward(const Tensor4<S>& gout) {
    Tensor4<S> gx = gout;
    gx.data *= mask_.data;
    return gx;
  }

 private:
  Tensor4<S> mask_;
};

template <typename S>
inline MatrixX<S> sigmoid(const MatrixX<S>& z) {
  return z.unaryExpr([](S v) { return S(1) / (S(1) + std::exp(-v)); });
}

template <typename S>
inline void sigmoid_inplace(Tensor4<S>& t) {
  t.data = t.data.unaryExpr([](S v) { return S(1) / (S(1) + std::exp(-v)); });
}

// Mean over the spatial dims: [N, C, H, W] -> [N, C].
template <typename S>
inline MatrixX<S> global_avg_pool(const Tensor4<S>& x) {
  MatrixX<S> out(x.n, x.c);
  S inv = S(1) / static_cast<S>(x.h * x.w);
  for (int n = 0; n < x.n; ++n)
    for (int c = 0; c < x.c; ++c) out(n, c) = x.plane(n, c).sum() * inv;
  return out;
}

template <typename S>
inline Tensor4<S> global_avg_pool_backward(const MatrixX<S>& gp, int h, int w) {
  Tensor4<S> gx(static_cast<int>(gp.rows()), static_cast<int>(gp.cols()), h, w);
  S inv = S(1) / static_cast<S>(h * w);
  for (int n = 0; n < gx.n; ++n)
    for (int c = 0; c < gx.c; ++c) gx.plane(n, c) = gp(n, c) * inv;
  return gx;
}

template <typename S>
inline Tensor4<S> upsample_nearest2x(const Tensor4<S>& x) {
  Tensor4<S> out(x.n, x.c, x.h * 2, x.w * 2);
  for (int n = 0; n < x.n; ++n)
    for (int c = 0; c < x.c; ++c) {
      auto src = x.plane(n, c);
      auto dst = out.plane(n, c);
      for (int y = 0; y < x.h; ++y)
        for (int xx = 0; xx < x.w; ++xx) {
          S v = src(y, xx);
          dst(2 * y, 2 * xx) = v;
          dst(2 * y, 2 * xx + 1) = v;
          dst(2 * y + 1, 2 * xx) = v;
          dst(2 * y + 1, 2 * xx + 1) = v;
        }
    }
  return out;
}

template <typename S>
inline Tensor4<S> upsample_nearest2x_backward(const Tensor4<S>& gout) {
  Tensor4<S> gx(gout.n, gout.c, gout.h / 2, gout.w / 2);
  for (int n = 0; n < gout.n; ++n)
    for (int c = 0; c < gout.c; ++c) {
      auto src = gout.plane(n, c);
      auto dst = gx.plane(n, c);
      for (int y = 0; y < gx.h; ++y)
        for (int xx = 0; xx < gx.w; ++xx)
          dst(y, xx) = src(2 * y, 2 * xx) + src(2 * y, 2 * xx + 1) + src(2 * y + 1, 2 * xx) +
                       src(2 * y + 1, 2 * xx + 1);
    }
  return gx;
}

}  // namespace afa::nn
