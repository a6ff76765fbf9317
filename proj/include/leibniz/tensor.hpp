#pragma once

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Dense rank-3 tensor T[i][j][k] over the exact scalar, stored row-major as
/// an (a*b) x c matrix: entry (i,j,k) lives at flat(i*b + j, k). Flattening a
/// square n x n x n tensor to a vector therefore orders coordinates i-major,
/// then j, then k.
struct Tensor3 {
  Index a = 0, b = 0, c = 0;
  Mat flat;

  Tensor3() : flat(0, 0) {}
  Tensor3(Index a_, Index b_, Index c_)
      : a(a_), b(b_), c(c_), flat(Mat::Constant(a_ * b_, c_, Scalar(0))) {}

  const Scalar& at(Index i, Index j, Index k) const { return flat(i * b + j, k); }
  Scalar& at(Index i, Index j, Index k) { return flat(i * b + j, k); }

  Vec slot(Index i, Index j) const { return flat.row(i * b + j).transpose(); }
  void set_slot(Index i, Index j, const Vec& v) { flat.row(i * b + j) = v.transpose(); }

  bool slot_is_zero(Index i, Index j) const {
    for (Index k = 0; k < c; ++k)
      if (!leibniz::is_zero(flat(i * b + j, k))) return false;
    return true;
  }

  bool is_zero() const {
    for (Index r = 0; r < flat.rows(); ++r)
      for (Index k = 0; k < c; ++k)
        if (!leibniz::is_zero(flat(r, k))) return false;
    return true;
  }

  Vec flatten() const {
    Vec v = Vec::Constant(a * b * c, Scalar(0));
    for (Index r = 0; r < flat.rows(); ++r)
      for (Index k = 0; k < c; ++k) v[r * c + k] = flat(r, k);
    return v;
  }

  static Tensor3 from_flat(const Vec& v, Index a, Index b, Index c) {
    Tensor3 t(a, b, c);
    for (Index r = 0; r < a * b; ++r)
      for (Index k = 0; k < c; ++k) t.flat(r, k) = v[r * c + k];
    return t;
  }

  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && matrices_equal(x.flat, y.flat);
  }
  friend bool operator!=(const Tensor3& x, const Tensor3& y) { return !(x == y); }
};

}  // namespace leibniz
