#pragma once

#include "leibniz/cohomology.hpp"

namespace leibniz {

/// Trilinear defect T(e_i,e_j,e_k) = sum_c flat((i*n+j)*n+k, c) e_c.
struct TrilinearDefect {
  Index n = 0;
  Mat flat;

  TrilinearDefect() : flat(0, 0) {}
  explicit TrilinearDefect(Index n_) : n(n_), flat(Mat::Constant(n_ * n_ * n_, n_, Scalar(0))) {}

  Scalar& at(Index i, Index j, Index k, Index c) { return flat((i * n + j) * n + k, c); }
  const Scalar& at(Index i, Index j, Index k, Index c) const {
    return flat((i * n + j) * n + k, c);
  }

  bool is_zero() const {
    for (Index r = 0; r < flat.rows(); ++r)
      for (Index c = 0; c < n; ++c)
        if (!leibniz::is_zero(flat(r, c))) return false;
    return true;
  }
  Index nonzero_count() const {
    Index cnt = 0;
    for (Index r = 0; r < flat.rows(); ++r)
      for (Index c = 0; c < n; ++c)
        if (!leibniz::is_zero(flat(r, c))) ++cnt;
    return cnt;
  }
};

/// Symmetrized quadratic obstruction data of a cocycle family: the deformed
/// bracket mu + sum a_i phi_i satisfies the Leibniz identity iff
/// sum_{i<=j} a_i a_j T_sym(i,j) vanishes.
struct ObstructionReport {
  std::vector<Cochain2> cocycles;
  // pairs (i,j), i<=j, in lexicographic order, with T_sym(i,j)
  std::vector<std::tuple<Index, Index, TrilinearDefect>> sym_tensors;
  std::vector<std::pair<Index, Index>> quadratic_support;  // nonzero pairs

  // one record per tensor position hit by some pair: (row, col, terms),
  // terms = (index into sym_tensors, entry value); feeds fast evaluation
  struct Cell {
    Index row, col;
    std::vector<std::pair<Index, Scalar>> terms;
  };
  std::vector<Cell> cells;

  bool pair_supported(Index i, Index j) const {
    for (auto& [a, b] : quadratic_support)
      if (a == i && b == j) return true;
    return false;
  }
};

struct IntegrabilityVerdict {
  bool integrable = true;
  std::optional<std::pair<Index, Index>> failing_pair;
};

struct DeformResult {
  Algebra algebra;
  std::vector<TripleDefect> defects;
  bool ok() const { return defects.empty(); }
};

/// T(x,y,z) = f(x, g(y,z)) - f(g(x,y), z) + f(g(x,z), y) on basis triples.
TrilinearDefect obstruction_tensor(const Cochain2& f, const Cochain2& g);

/// T(i,j) + T(j,i) for i < j, T(i,i) on the diagonal.
TrilinearDefect symmetrized_obstruction(const Cochain2& f, const Cochain2& g);

/// Full symmetric family over a cocycle list; every input must pass
/// cocycle_defects-empty over `a`.
ObstructionReport obstruction_report(const Algebra& a, const std::vector<Cochain2>& cocycles);

/// Whether sum a_i a_j T_sym(i,j) vanishes at the given coefficients.
bool obstruction_vanishes_at(const ObstructionReport& report, const Vec& coeffs);

/// Deformed bracket mu + sum coeffs_i cocycles_i with its Leibniz verdict.
DeformResult deform(const Algebra& a, const std::vector<Cochain2>& cocycles, const Vec& coeffs);

/// All pairwise symmetrized obstructions of the direction cochains vanish.
/// Directions may be linear combinations, not just raw basis cocycles.
IntegrabilityVerdict subspace_integrable(const Algebra& a,
                                         const std::vector<Cochain2>& directions);
IntegrabilityVerdict subspace_integrable(const ObstructionReport& report,
                                         const std::vector<Index>& subset);

/// Stable textual signature of the quadratic support, e.g. "a1*a2,a2*a3".
std::string support_signature(const ObstructionReport& report);

}  // namespace leibniz
