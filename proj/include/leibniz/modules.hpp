#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Right module over an algebra: (v_p, e_j) = sum_q action(p,j,q) v_q.
/// The base algebra travels with the module.
struct RightModule {
  std::string name;
  Algebra base;
  std::vector<std::string> basis;
  Tensor3 action;  // (mdim, n, mdim)

  RightModule() = default;
  RightModule(std::string name_, Algebra base_, std::vector<std::string> labels)
      : name(std::move(name_)),
        base(std::move(base_)),
        basis(std::move(labels)),
        action(static_cast<Index>(basis.size()), base.dim(), static_cast<Index>(basis.size())) {}

  Index mdim() const { return static_cast<Index>(basis.size()); }

  Vec act(const Vec& v, Index j) const {
    Vec w = Vec::Constant(mdim(), Scalar(0));
    for (Index p = 0; p < mdim(); ++p) {
      if (is_zero(v[p])) continue;
      for (Index q = 0; q < mdim(); ++q) {
        const Scalar& c = action.at(p, j, q);
        if (!is_zero(c)) w[q] += v[p] * c;
      }
    }
    return w;
  }
};

/// Linear map into square matrices, one image per domain basis element.
struct MatrixEmbedding {
  std::string name;
  Algebra domain;
  std::vector<Mat> images;

  Index image_size() const { return images.empty() ? 0 : images.front().rows(); }
  Mat image_of(const Vec& v) const {
    Mat m = Mat::Constant(image_size(), image_size(), Scalar(0));
    for (Index i = 0; i < static_cast<Index>(images.size()); ++i)
      if (!is_zero(v[i])) m += v[i] * images[i];
    return m;
  }
};

struct ModuleDefect {
  Index p, j, k;  // module element, two algebra elements
  Vec defect;
};

enum class BimoduleAxiom { module_first, middle, last };

struct BimoduleDefect {
  BimoduleAxiom axiom;
  Index x, y, z;
  Vec defect;
};

struct EmbeddingVerdict {
  std::vector<PairDefect> defects;  // defect matrices flattened row-major
  bool homomorphism = false;
  bool injective = false;
  bool ok() const { return homomorphism && injective; }
};

/// defect(p,j,k) = (v_p,[e_j,e_k]) - ((v_p,e_j),e_k) + ((v_p,e_k),e_j);
/// empty iff `mod` is a right Lie module. The base must match and be Lie.
std::vector<ModuleDefect> right_module_defects(const Algebra& lie, const RightModule& mod);
template <typename Pred>
std::vector<ModuleDefect> right_module_defects_if(const Algebra& lie, const RightModule& mod,
                                                  Pred keep);

/// Checks the three Leibniz bimodule axioms on basis triples. `left` has
/// shape (n, m, m): [e_j, v_p] = sum_q left(j,p,q) v_q.
std::vector<BimoduleDefect> leibniz_bimodule_defects(const Algebra& a, const Tensor3& left,
                                                     const Tensor3& right);

/// Leibniz algebra on base + module: base x base from the algebra,
/// module x base from the action, everything else zero. The module axiom is
/// verified up front; pass verify=false for degree-truncated modules whose
/// axiom only holds on a scoped triple set.
Algebra semidirect(const Algebra& lie, const RightModule& mod, bool verify = true);

EmbeddingVerdict embedding_defects(const MatrixEmbedding& e);

enum class ActionConvention { row, column };

/// Module structure on the image space. Under the row convention basis
/// vectors act as row-vector right multiplication, action(p,j,q) = M_j(p,q);
/// the column convention takes the transpose. The row convention is the one
/// that reproduces the catalog module tables.
RightModule action_from_embedding(const MatrixEmbedding& e, ActionConvention convention);

/// Truncated polynomial module {x^0..x^N} over diamond_complex_13 with
/// J,P1,P2,T acting as -t, x-multiplication, d/dx, identity. Products beyond
/// degree N are cut to zero; the module axioms hold on degrees t <= N-2.
RightModule fock_module(Index degree);

/// Scope predicate for degree-truncated checks: keeps a triple when every
/// involved index that is a polynomial basis element x^t has t <= N-2.
/// `first_poly` is the index of x^0.
inline auto truncation_scope(Index first_poly, Index degree) {
  return [first_poly, degree](Index i, Index j, Index k) {
    auto fits = [&](Index v) { return v < first_poly || (v - first_poly) <= degree - 2; };
    return fits(i) && fits(j) && fits(k);
  };
}

template <typename Pred>
std::vector<ModuleDefect> right_module_defects_if(const Algebra& lie, const RightModule& mod,
                                                  Pred keep) {
  if (!(mod.base == lie)) throw Error("right_module_defects: base algebra mismatch");
  std::vector<ModuleDefect> out;
  Index n = lie.dim();
  for (Index p = 0; p < mod.mdim(); ++p) {
    Vec vp = Vec::Constant(mod.mdim(), Scalar(0));
    vp[p] = Scalar(1);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        if (!keep(p, j, k)) continue;
        Vec lhs = Vec::Constant(mod.mdim(), Scalar(0));
        Vec bjk = lie.structure.slot(j, k);
        for (Index m = 0; m < n; ++m)
          if (!is_zero(bjk[m])) {
            for (Index q = 0; q < mod.mdim(); ++q) {
              const Scalar& c = mod.action.at(p, m, q);
              if (!is_zero(c)) lhs[q] += bjk[m] * c;
            }
          }
        Vec d = lhs - mod.act(mod.act(vp, j), k) + mod.act(mod.act(vp, k), j);
        if (!is_zero_vector(d)) out.push_back({p, j, k, std::move(d)});
      }
  }
  return out;
}

}  // namespace leibniz
