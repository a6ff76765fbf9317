#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/tensor.hpp"

namespace leibniz {

enum class FieldTag { rational, gaussian };

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k structure(i,j,k) e_k.
struct Algebra {
  std::string name;
  std::vector<std::string> basis;
  Tensor3 structure;
  FieldTag field = FieldTag::gaussian;

  Algebra() = default;
  Algebra(std::string name_, std::vector<std::string> labels)
      : name(std::move(name_)),
        basis(std::move(labels)),
        structure(static_cast<Index>(basis.size()), static_cast<Index>(basis.size()),
                  static_cast<Index>(basis.size())) {}

  Index dim() const { return static_cast<Index>(basis.size()); }

  std::optional<Index> label_index(const std::string& label) const {
    for (Index i = 0; i < dim(); ++i)
      if (basis[i] == label) return i;
    return std::nullopt;
  }

  /// Adds c * e_k to the product [e_i, e_j].
  void add_product(Index i, Index j, Index k, const Scalar& c) { structure.at(i, j, k) += c; }
  /// Sets [e_i, e_j] = c * e_k and [e_j, e_i] = -c * e_k.
  void set_antisymmetric_pair(Index i, Index j, Index k, const Scalar& c) {
    structure.at(i, j, k) = c;
    structure.at(j, i, k) = -c;
  }

  /// Recomputes the field tag from the tensor content.
  void derive_field_tag() {
    for (Index r = 0; r < structure.flat.rows(); ++r)
      for (Index k = 0; k < structure.c; ++k)
        if (!structure.flat(r, k).is_real()) {
          field = FieldTag::gaussian;
          return;
        }
    field = FieldTag::rational;
  }

  friend bool operator==(const Algebra& x, const Algebra& y) {
    return x.name == y.name && x.basis == y.basis && x.structure == y.structure;
  }
};

struct TripleDefect {
  Index i, j, k;
  Vec defect;
};

struct PairDefect {
  Index i, j;
  Vec defect;
};

struct LieVerdict {
  bool antisymmetric = true;
  std::optional<std::pair<Index, Index>> antisymmetry_witness;
  bool leibniz = true;
  std::optional<TripleDefect> leibniz_witness;
  bool ok() const { return antisymmetric && leibniz; }
};

struct MorphismVerdict {
  std::vector<PairDefect> defects;
  bool homomorphism = false;
  bool invertible = false;
  bool isomorphism() const { return homomorphism && invertible; }
};

/// Isomorphism-invariant summary. dim_hl2 and obstruction_support are filled
/// by the cohomology/deformation layers on demand; the base fields are what
/// fingerprint() itself computes.
struct Fingerprint {
  Index dim = 0;
  Index dim_product_space = 0;
  Index dim_right_annihilator = 0;
  Index dim_left_annihilator = 0;
  Index dim_center = 0;
  Index dim_squares_ideal = 0;
  bool is_lie = false;
  std::optional<Index> dim_hl2;
  std::optional<std::string> obstruction_support;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Vec bracket(const Algebra& a, const Vec& u, const Vec& v);
Vec bracket_basis(const Algebra& a, Index i, Index j);
Vec bracket_ve(const Algebra& a, const Vec& u, Index j);  // [u, e_j]
Vec bracket_ev(const Algebra& a, Index i, const Vec& v);  // [e_i, v]

/// defect(i,j,k) = [[e_i,e_j],e_k] - [[e_i,e_k],e_j] - [e_i,[e_j,e_k]].
Vec leibniz_defect(const Algebra& a, Index i, Index j, Index k);

/// All basis triples with nonzero defect; empty iff the table is a Leibniz
/// algebra. The filtered overload restricts the scan (used for truncations).
std::vector<TripleDefect> leibniz_defects(const Algebra& a);
template <typename Pred>
std::vector<TripleDefect> leibniz_defects_if(const Algebra& a, Pred keep) {
  std::vector<TripleDefect> out;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k) {
        if (!keep(i, j, k)) continue;
        Vec d = leibniz_defect(a, i, j, k);
        if (!is_zero_vector(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

LieVerdict is_lie(const Algebra& a);

Subspace<Scalar> right_annihilator(const Algebra& a);
Subspace<Scalar> left_annihilator(const Algebra& a);
Subspace<Scalar> center(const Algebra& a);
Subspace<Scalar> product_space(const Algebra& a);

/// Smallest two-sided ideal containing all squares [x,x].
Subspace<Scalar> squares_ideal(const Algebra& a);

/// Quotient by a verified two-sided ideal, on the canonical echelon
/// complement (standard basis vectors at non-pivot coordinates). Throws with
/// a witness product when `ideal` is not an ideal.
Algebra quotient_algebra(const Algebra& a, const Subspace<Scalar>& ideal);

/// Structure constants in the basis given by the columns of P (invertible).
Algebra change_basis(const Algebra& a, const Mat& p);

/// Checks P([x,y]_a) = [Px,Py]_b on all basis pairs; P is dim(b) x dim(a).
MorphismVerdict check_morphism(const Algebra& a, const Algebra& b, const Mat& p);

Fingerprint fingerprint(const Algebra& a);

std::string describe_triple(const Algebra& a, const TripleDefect& d);

}  // namespace leibniz
