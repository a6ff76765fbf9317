#include "leibniz/algebra.hpp"

#include <sstream>

namespace leibniz {

Vec bracket_basis(const Algebra& a, Index i, Index j) { return a.structure.slot(i, j); }

Vec bracket_ve(const Algebra& a, const Vec& u, Index j) {
  Index n = a.dim();
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (Index k = 0; k < n; ++k) {
      const Scalar& c = a.structure.at(i, j, k);
      if (!is_zero(c)) w[k] += u[i] * c;
    }
  }
  return w;
}

Vec bracket_ev(const Algebra& a, Index i, const Vec& v) {
  Index n = a.dim();
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index j = 0; j < n; ++j) {
    if (is_zero(v[j])) continue;
    for (Index k = 0; k < n; ++k) {
      const Scalar& c = a.structure.at(i, j, k);
      if (!is_zero(c)) w[k] += v[j] * c;
    }
  }
  return w;
}

Vec bracket(const Algebra& a, const Vec& u, const Vec& v) {
  Index n = a.dim();
  if (u.size() != n || v.size() != n) throw Error("bracket: dimension mismatch");
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (Index j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      Scalar uv = u[i] * v[j];
      for (Index k = 0; k < n; ++k) {
        const Scalar& c = a.structure.at(i, j, k);
        if (!is_zero(c)) w[k] += uv * c;
      }
    }
  }
  return w;
}

Vec leibniz_defect(const Algebra& a, Index i, Index j, Index k) {
  Vec d = bracket_ve(a, a.structure.slot(i, j), k);
  d -= bracket_ve(a, a.structure.slot(i, k), j);
  d -= bracket_ev(a, i, a.structure.slot(j, k));
  return d;
}

std::vector<TripleDefect> leibniz_defects(const Algebra& a) {
  return leibniz_defects_if(a, [](Index, Index, Index) { return true; });
}

LieVerdict is_lie(const Algebra& a) {
  LieVerdict v;
  Index n = a.dim();
  for (Index i = 0; i < n && v.antisymmetric; ++i)
    for (Index j = 0; j < n; ++j) {
      bool anti = true;
      for (Index k = 0; k < n; ++k)
        if (a.structure.at(i, j, k) != -a.structure.at(j, i, k)) {
          anti = false;
          break;
        }
      if (!anti) {
        v.antisymmetric = false;
        v.antisymmetry_witness = {i, j};
        break;
      }
    }
  auto defects = leibniz_defects(a);
  if (!defects.empty()) {
    v.leibniz = false;
    v.leibniz_witness = defects.front();
  }
  return v;
}

namespace {

// Kernel of the stacked multiplication-by-z map. left=true solves
// [e_i, z] = 0 for all i; left=false solves [z, e_i] = 0 for all i.
Subspace<Scalar> annihilator(const Algebra& a, bool fix_left_factor) {
  Index n = a.dim();
  Mat m = Mat::Constant(n * n, n, Scalar(0));
  for (Index i = 0; i < n; ++i)
    for (Index c = 0; c < n; ++c)
      for (Index z = 0; z < n; ++z)
        m(i * n + c, z) = fix_left_factor ? a.structure.at(i, z, c) : a.structure.at(z, i, c);
  return kernel_basis(m);
}

}  // namespace

Subspace<Scalar> right_annihilator(const Algebra& a) { return annihilator(a, true); }
Subspace<Scalar> left_annihilator(const Algebra& a) { return annihilator(a, false); }

Subspace<Scalar> center(const Algebra& a) {
  Index n = a.dim();
  Mat m = Mat::Constant(2 * n * n, n, Scalar(0));
  for (Index i = 0; i < n; ++i)
    for (Index c = 0; c < n; ++c)
      for (Index z = 0; z < n; ++z) {
        m(i * n + c, z) = a.structure.at(i, z, c);
        m(n * n + i * n + c, z) = a.structure.at(z, i, c);
      }
  return kernel_basis(m);
}

Subspace<Scalar> product_space(const Algebra& a) {
  std::vector<Vec> rows;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      if (!a.structure.slot_is_zero(i, j)) rows.push_back(a.structure.slot(i, j));
    }
  return Subspace<Scalar>::from_rows(a.dim(), rows);
}

Subspace<Scalar> squares_ideal(const Algebra& a) {
  Index n = a.dim();
  RowEchelon<Scalar> ech(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Vec s = a.structure.slot(i, j) + a.structure.slot(j, i);
      if (!is_zero_vector(s)) ech.insert(std::move(s));
    }
  // closure under left and right multiplication, iterated to a fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    Index r = ech.rank();
    std::vector<Vec> current;
    current.reserve(r);
    for (Index q = 0; q < r; ++q) current.push_back(ech.row(q));
    for (const Vec& v : current)
      for (Index j = 0; j < n; ++j) {
        if (ech.insert(bracket_ve(a, v, j))) grew = true;
        if (ech.insert(bracket_ev(a, j, v))) grew = true;
      }
  }
  return Subspace<Scalar>::from_matrix_rows(ech.to_matrix());
}

Algebra quotient_algebra(const Algebra& a, const Subspace<Scalar>& ideal) {
  Index n = a.dim();
  if (ideal.ambient() != n) throw Error("quotient_algebra: ambient dimension mismatch");
  for (Index r = 0; r < ideal.dim(); ++r) {
    Vec v = ideal.basis_row(r);
    for (Index j = 0; j < n; ++j) {
      if (!ideal.contains(bracket_ve(a, v, j)))
        throw Error("quotient_algebra: not an ideal, witness [" + format_vector(v) + ", " +
                    a.basis[j] + "]");
      if (!ideal.contains(bracket_ev(a, j, v)))
        throw Error("quotient_algebra: not an ideal, witness [" + a.basis[j] + ", " +
                    format_vector(v) + "]");
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (Index r = 0; r < ideal.dim(); ++r) {
    for (Index k = 0; k < n; ++k)
      if (!is_zero(ideal.basis()(r, k))) {
        is_pivot[k] = true;
        break;
      }
  }
  std::vector<Index> free_coords;
  for (Index k = 0; k < n; ++k)
    if (!is_pivot[k]) free_coords.push_back(k);

  std::vector<std::string> labels;
  for (Index f : free_coords) labels.push_back(a.basis[f]);
  Algebra q(a.name + "/I", labels);

  auto reduce_mod_ideal = [&](Vec v) {
    for (Index r = 0; r < ideal.dim(); ++r) {
      Index p = -1;
      for (Index k = 0; k < n; ++k)
        if (!is_zero(ideal.basis()(r, k))) {
          p = k;
          break;
        }
      if (p >= 0 && !is_zero(v[p])) {
        Scalar c = v[p];
        for (Index k = 0; k < n; ++k)
          if (!is_zero(ideal.basis()(r, k))) v[k] -= c * ideal.basis()(r, k);
      }
    }
    return v;
  };

  Index qdim = static_cast<Index>(free_coords.size());
  for (Index x = 0; x < qdim; ++x)
    for (Index y = 0; y < qdim; ++y) {
      Vec w = reduce_mod_ideal(a.structure.slot(free_coords[x], free_coords[y]));
      for (Index z = 0; z < qdim; ++z) q.structure.at(x, y, z) = w[free_coords[z]];
    }
  q.derive_field_tag();
  return q;
}

Algebra change_basis(const Algebra& a, const Mat& p) {
  Index n = a.dim();
  if (p.rows() != n || p.cols() != n) throw Error("change_basis: matrix shape mismatch");
  auto pinv = try_inverse(p);
  if (!pinv) throw Error("change_basis: singular matrix");
  Algebra out(a.name + "'", a.basis);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec w = bracket(a, p.col(i), p.col(j));
      Vec c = *pinv * w;
      out.structure.set_slot(i, j, c);
    }
  out.derive_field_tag();
  return out;
}

MorphismVerdict check_morphism(const Algebra& a, const Algebra& b, const Mat& p) {
  if (p.cols() != a.dim() || p.rows() != b.dim())
    throw Error("check_morphism: matrix shape mismatch");
  MorphismVerdict v;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      Vec lhs = p * a.structure.slot(i, j);
      Vec rhs = bracket(b, p.col(i), p.col(j));
      Vec d = lhs - rhs;
      if (!is_zero_vector(d)) v.defects.push_back({i, j, std::move(d)});
    }
  v.homomorphism = v.defects.empty();
  v.invertible = (p.rows() == p.cols()) && rank_of(p) == p.rows();
  return v;
}

Fingerprint fingerprint(const Algebra& a) {
  Fingerprint f;
  f.dim = a.dim();
  f.dim_product_space = product_space(a).dim();
  f.dim_right_annihilator = right_annihilator(a).dim();
  f.dim_left_annihilator = left_annihilator(a).dim();
  f.dim_center = center(a).dim();
  f.dim_squares_ideal = squares_ideal(a).dim();
  f.is_lie = is_lie(a).ok();
  return f;
}

std::string describe_triple(const Algebra& a, const TripleDefect& d) {
  std::ostringstream os;
  os << "(" << a.basis[d.i] << "," << a.basis[d.j] << "," << a.basis[d.k] << ")";
  return os.str();
}

}  // namespace leibniz
