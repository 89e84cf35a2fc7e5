#pragma once

#include <Eigen/Core>

#include <cassert>
#include <vector>

#include "afanet/common.hpp"

namespace afa {

template <typename S>
using ArrayX = Eigen::Array<S, Eigen::Dynamic, 1>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using PlaneMap = Eigen::Map<Eigen::Array<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename S>
using ConstPlaneMap =
    Eigen::Map<const Eigen::Array<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

// Dense NCHW feature map. Contiguous, n-major; each (n, c) plane is a
// row-major h x w slice.
template <typename S>
struct Tensor4 {
  int n = 0, c = 0, h = 0, w = 0;
  ArrayX<S> data;

  Tensor4() = default;
  Tensor4(int n_, int c_, int h_, int w_) : n(n_), c(c_), h(h_), w(w_) {
    data = ArrayX<S>::Zero(static_cast<Eigen::Index>(n) * c * h * w);
  }

  static Tensor4 zeros(int n, int c, int h, int w) { return Tensor4(n, c, h, w); }

  Eigen::Index size() const { return data.size(); }
  bool same_shape(const Tensor4& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }

  S& at(int i, int j, int y, int x) {
    return data[((static_cast<Eigen::Index>(i) * c + j) * h + y) * w + x];
  }
  S at(int i, int j, int y, int x) const {
    return data[((static_cast<Eigen::Index>(i) * c + j) * h + y) * w + x];
  }

  S* plane_ptr(int i, int j) {
    return data.data() + (static_cast<Eigen::Index>(i) * c + j) * h * w;
  }
  const S* plane_ptr(int i, int j) const {
    return data.data() + (static_cast<Eigen::Index>(i) * c + j) * h * w;
  }

  PlaneMap<S> plane(int i, int j) { return PlaneMap<S>(plane_ptr(i, j), h, w); }
  ConstPlaneMap<S> plane(int i, int j) const {
    return ConstPlaneMap<S>(plane_ptr(i, j), h, w);
  }

  void set_zero() { data.setZero(); }

  template <typename T>
  Tensor4<T> cast() const {
    Tensor4<T> out(n, c, h, w);
    out.data = data.template cast<T>();
    return out;
  }
};

template <typename S>
Tensor4<S> concat_channels(const std::vector<const Tensor4<S>*>& parts) {
  assert(!parts.empty());
  int n = parts[0]->n, h = parts[0]->h, w = parts[0]->w, ctot = 0;
  for (const auto* p : parts) {
    require(p->n == n && p->h == h && p->w == w, "concat_channels: shape mismatch");
    ctot += p->c;
  }
  Tensor4<S> out(n, ctot, h, w);
  for (int i = 0; i < n; ++i) {
    int co = 0;
    for (const auto* p : parts)
      for (int j = 0; j < p->c; ++j, ++co) out.plane(i, co) = p->plane(i, j);
  }
  return out;
}

template <typename S>
Tensor4<S> concat_channels(const Tensor4<S>& a, const Tensor4<S>& b) {
  return concat_channels<S>({&a, &b});
}

template <typename S>
Tensor4<S> slice_channels(const Tensor4<S>& x, int c0, int count) {
  assert(c0 >= 0 && c0 + count <= x.c);
  Tensor4<S> out(x.n, count, x.h, x.w);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < count; ++j) out.plane(i, j) = x.plane(i, c0 + j);
  return out;
}

}  // namespace afa
