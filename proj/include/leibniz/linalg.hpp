#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Index = Eigen::Index;

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Scalar = GaussianRational;
using Mat = DenseMatrix<Scalar>;
using Vec = DenseVector<Scalar>;

template <typename S>
bool is_zero_vector(const DenseVector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return false;
  return true;
}

template <typename S>
bool matrices_equal(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename S>
std::string format_vector(const DenseVector<S>& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

/// Incremental reduced-row-echelon accumulator. Rows are inserted one at a
/// time (reduction against existing pivots only); finalize() back-substitutes
/// to the canonical reduced form. Pivot = first nonzero in column order.
template <typename S>
class RowEchelon {
public:
  explicit RowEchelon(Index width) : width_(width), pivot_of_col_(width, -1) {}

  Index width() const { return width_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Reduces v against the stored rows in place; returns the column of the
  /// first surviving nonzero entry, or -1 if v reduces to zero.
  Index reduce(DenseVector<S>& v) const {
    Index col = 0;
    while (col < width_) {
      if (is_zero(v[col])) {
        ++col;
        continue;
      }
      Index r = pivot_of_col_[col];
      if (r < 0) return col;
      axpy(v, -v[col], rows_[r], col);
      ++col;
    }
    return -1;
  }

  /// Inserts a row; returns true when the rank grew.
  bool insert(DenseVector<S> v) {
    Index col = reduce(v);
    if (col < 0) return false;
    S inv = v[col].inverse();
    for (Index k = col; k < width_; ++k)
      if (!is_zero(v[k])) v[k] = v[k] * inv;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    Index at = it - pivots_.begin();
    pivots_.insert(it, col);
    rows_.insert(rows_.begin() + at, std::move(v));
    for (Index c = 0; c < width_; ++c)
      if (pivot_of_col_[c] >= at && pivot_of_col_[c] >= 0) ++pivot_of_col_[c];
    pivot_of_col_[col] = at;
    reduced_ = false;
    return true;
  }

  /// Back-substitutes so every pivot column is zero outside its own row.
  void finalize() {
    if (reduced_) return;
    for (Index r = rank() - 1; r >= 0; --r) {
      Index p = pivots_[r];
      for (Index e = 0; e < r; ++e) {
        if (!is_zero(rows_[e][p])) axpy(rows_[e], -rows_[e][p], rows_[r], p);
      }
    }
    reduced_ = true;
  }

  DenseMatrix<S> to_matrix() {
    finalize();
    DenseMatrix<S> m = DenseMatrix<S>::Constant(rank(), width_, S(0));
    for (Index r = 0; r < rank(); ++r) m.row(r) = rows_[r].transpose();
    return m;
  }

  const DenseVector<S>& row(Index r) const { return rows_[r]; }

private:
  static void axpy(DenseVector<S>& dst, const S& c, const DenseVector<S>& src, Index from) {
    for (Index k = from; k < src.size(); ++k)
      if (!is_zero(src[k])) dst[k] += c * src[k];
  }

  Index width_;
  std::vector<DenseVector<S>> rows_;
  std::vector<Index> pivots_;
  std::vector<Index> pivot_of_col_;
  bool reduced_ = true;
};

template <typename S>
struct RrefResult {
  DenseMatrix<S> reduced;           // same shape, zero rows at the bottom
  std::vector<Index> pivot_columns; // increasing
  Index rank = 0;
};

/// Canonical reduced row echelon form (unique for a given row space).
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> ech(m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    DenseVector<S> row = m.row(i).transpose();
    ech.insert(std::move(row));
  }
  RrefResult<S> out;
  out.rank = ech.rank();
  out.pivot_columns = ech.pivots();
  out.reduced = DenseMatrix<S>::Constant(m.rows(), m.cols(), S(0));
  DenseMatrix<S> basis = ech.to_matrix();
  out.reduced.topRows(out.rank) = basis;
  return out;
}

template <typename Derived>
Index rank_of(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// Row space of `basis` in canonical reduced echelon form.
template <typename S>
class Subspace {
public:
  Subspace() : ambient_(0), basis_(0, 0) {}
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_rows(Index ambient, const std::vector<DenseVector<S>>& rows) {
    RowEchelon<S> ech(ambient);
    for (const auto& r : rows) ech.insert(r);
    Subspace s(ambient);
    s.basis_ = ech.to_matrix();
    return s;
  }

  static Subspace from_matrix_rows(const DenseMatrix<S>& m) {
    RowEchelon<S> ech(m.cols());
    for (Index i = 0; i < m.rows(); ++i) ech.insert(m.row(i).transpose());
    Subspace s(m.cols());
    s.basis_ = ech.to_matrix();
    return s;
  }

  static Subspace full(Index ambient) {
    Subspace s(ambient);
    s.basis_ = DenseMatrix<S>::Constant(ambient, ambient, S(0));
    for (Index i = 0; i < ambient; ++i) s.basis_(i, i) = S(1);
    return s;
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const DenseMatrix<S>& basis() const { return basis_; }
  DenseVector<S> basis_row(Index i) const { return basis_.row(i).transpose(); }

  bool contains(const DenseVector<S>& v) const { return !residual(v).has_value(); }

  bool contains_subspace(const Subspace& inner) const {
    for (Index i = 0; i < inner.dim(); ++i)
      if (!contains(inner.basis_row(i))) return false;
    return true;
  }

  /// Coefficients of v in the stored basis, or nullopt when v is outside.
  std::optional<DenseVector<S>> coordinates_in(const DenseVector<S>& v) const {
    if (v.size() != ambient_) throw Error("coordinates_in: ambient dimension mismatch");
    DenseVector<S> coeffs = DenseVector<S>::Constant(dim(), S(0));
    DenseVector<S> rest = v;
    for (Index r = 0; r < dim(); ++r) {
      Index p = pivot_col(r);
      if (is_zero(rest[p])) continue;
      coeffs[r] = rest[p];
      for (Index k = 0; k < ambient_; ++k)
        if (!is_zero(basis_(r, k))) rest[k] -= coeffs[r] * basis_(r, k);
    }
    if (!is_zero_vector(rest)) return std::nullopt;
    return coeffs;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && matrices_equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  // First nonzero column of row r; rows are echelon so this is the pivot.
  Index pivot_col(Index r) const {
    for (Index k = 0; k < ambient_; ++k)
      if (!is_zero(basis_(r, k))) return k;
    return ambient_;
  }

  std::optional<DenseVector<S>> residual(const DenseVector<S>& v) const {
    DenseVector<S> rest = v;
    for (Index r = 0; r < dim(); ++r) {
      Index p = pivot_col(r);
      if (is_zero(rest[p])) continue;
      S c = rest[p];
      for (Index k = 0; k < ambient_; ++k)
        if (!is_zero(basis_(r, k))) rest[k] -= c * basis_(r, k);
    }
    if (is_zero_vector(rest)) return std::nullopt;
    return rest;
  }

  Index ambient_;
  DenseMatrix<S> basis_;
};

template <typename S>
Subspace<S> kernel_from_echelon(RowEchelon<S>& ech) {
  ech.finalize();
  Index width = ech.width();
  const auto& pivots = ech.pivots();
  std::vector<bool> is_pivot(width, false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<DenseVector<S>> rows;
  for (Index f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    DenseVector<S> x = DenseVector<S>::Constant(width, S(0));
    x[f] = S(1);
    for (Index r = 0; r < ech.rank(); ++r) x[pivots[r]] = -ech.row(r)[f];
    rows.push_back(std::move(x));
  }
  return Subspace<S>::from_rows(width, rows);
}

/// Basis of the right null space: dim = cols - rank.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> ech(m.cols());
  for (Index i = 0; i < m.rows(); ++i) ech.insert(m.row(i).transpose());
  return kernel_from_echelon(ech);
}

/// Complement vectors extending `inner` to a basis of `outer`. Throws when
/// some inner vector falls outside `outer` (the witness is named).
template <typename S>
std::vector<DenseVector<S>> extend_to_basis(const Subspace<S>& inner, const Subspace<S>& outer) {
  if (inner.ambient() != outer.ambient()) throw Error("extend_to_basis: ambient mismatch");
  for (Index i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis_row(i))) {
      throw Error("extend_to_basis: inner vector outside outer space, witness " +
                  format_vector(inner.basis_row(i)));
    }
  }
  RowEchelon<S> ech(inner.ambient());
  for (Index i = 0; i < inner.dim(); ++i) ech.insert(inner.basis_row(i));
  std::vector<DenseVector<S>> complement;
  for (Index i = 0; i < outer.dim(); ++i) {
    DenseVector<S> cand = outer.basis_row(i);
    if (ech.insert(cand)) complement.push_back(std::move(cand));
  }
  return complement;
}

/// Exact inverse via Gauss-Jordan; nullopt when singular.
template <typename S>
std::optional<DenseMatrix<S>> try_inverse(const DenseMatrix<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Index n = m.rows();
  DenseMatrix<S> aug = DenseMatrix<S>::Constant(n, 2 * n, S(0));
  aug.leftCols(n) = m;
  for (Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  auto r = rref(aug);
  for (Index i = 0; i < n; ++i) {
    if (r.pivot_columns.size() <= static_cast<std::size_t>(i) || r.pivot_columns[i] != i)
      return std::nullopt;
  }
  return DenseMatrix<S>(r.reduced.rightCols(n));
}

}  // namespace leibniz
