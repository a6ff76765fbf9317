#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Bilinear map f: L x L -> L as a rank-3 tensor, f(e_i,e_j) = sum_k F(i,j,k) e_k.
/// Doubles as the coordinate format for ZL2/BL2/HL2 basis vectors under the
/// i-major, j, k flattening.
struct Cochain2 {
  std::string name;
  std::string base;  // base algebra name, informational
  Tensor3 values;

  Cochain2() = default;
  Cochain2(std::string name_, const Algebra& a)
      : name(std::move(name_)), base(a.name), values(a.dim(), a.dim(), a.dim()) {}

  Index dim() const { return values.a; }

  /// f(u, v) by bilinear extension.
  Vec apply(const Vec& u, const Vec& v) const;
  /// f(e_i, v) and f(v, e_j).
  Vec apply_ev(Index i, const Vec& v) const;
  Vec apply_ve(const Vec& u, Index j) const;

  void set(Index i, Index j, Index k, const Scalar& c) { values.at(i, j, k) = c; }
};

struct CohomologySpaces {
  Subspace<Scalar> bl2;  // in the n^3 flattening
  Subspace<Scalar> zl2;
  std::vector<Cochain2> hl2_reps;
  Index dim_bl2() const { return bl2.dim(); }
  Index dim_zl2() const { return zl2.dim(); }
  Index dim_hl2() const { return zl2.dim() - bl2.dim(); }
};

struct Hl2Coordinates {
  Vec hl2_coords;       // coefficients on the HL2 representatives
  Vec coboundary_coords;  // coefficients on the BL2 basis rows
};

/// f(x,y) = [d(x),y] + [x,d(y)] - d([x,y]) for a linear endomorphism d.
Cochain2 coboundary_of(const Algebra& a, const Mat& d);

/// Image of the degree-1 differential over the n^2 elementary endomorphisms.
Subspace<Scalar> bl2_basis(const Algebra& a);

/// Six-term cocycle condition per basis triple; empty iff f is a 2-cocycle:
/// [e_i,f(e_j,e_k)] - [f(e_i,e_j),e_k] + [f(e_i,e_k),e_j]
///   + f(e_i,[e_j,e_k]) - f([e_i,e_j],e_k) + f([e_i,e_k],e_j) = 0.
std::vector<TripleDefect> cocycle_defects(const Algebra& a, const Cochain2& f);

/// Kernel of the degree-2 differential (n^4 equations, n^3 unknowns).
Subspace<Scalar> zl2_basis(const Algebra& a);

/// Full second-cohomology data; representatives are the canonical echelon
/// extension of BL2 inside ZL2.
CohomologySpaces hl2(const Algebra& a);

/// Exact decomposition f = sum c_i rep_i + coboundary. Requires f in ZL2.
Hl2Coordinates reduce_mod_bl2(const Algebra& a, const CohomologySpaces& spaces, const Cochain2& f);

Cochain2 cochain_from_flat(const Algebra& a, const std::string& name, const Vec& flat);

/// The bracket of `a` viewed as an element of C^2(L,L).
Cochain2 bracket_cochain(const Algebra& a);

}  // namespace leibniz
