#include "leibniz/cohomology.hpp"

namespace leibniz {

Vec Cochain2::apply(const Vec& u, const Vec& v) const {
  Index n = dim();
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (Index j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      Scalar uv = u[i] * v[j];
      for (Index k = 0; k < n; ++k) {
        const Scalar& c = values.at(i, j, k);
        if (!is_zero(c)) w[k] += uv * c;
      }
    }
  }
  return w;
}

Vec Cochain2::apply_ev(Index i, const Vec& v) const {
  Index n = dim();
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index j = 0; j < n; ++j) {
    if (is_zero(v[j])) continue;
    for (Index k = 0; k < n; ++k) {
      const Scalar& c = values.at(i, j, k);
      if (!is_zero(c)) w[k] += v[j] * c;
    }
  }
  return w;
}

Vec Cochain2::apply_ve(const Vec& u, Index j) const {
  Index n = dim();
  Vec w = Vec::Constant(n, Scalar(0));
  for (Index i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (Index k = 0; k < n; ++k) {
      const Scalar& c = values.at(i, j, k);
      if (!is_zero(c)) w[k] += u[i] * c;
    }
  }
  return w;
}

Cochain2 coboundary_of(const Algebra& a, const Mat& d) {
  Index n = a.dim();
  if (d.rows() != n || d.cols() != n) throw Error("coboundary_of: endomorphism shape mismatch");
  Cochain2 f("d1", a);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec val = bracket_ve(a, d.col(i), j);
      val += bracket_ev(a, i, d.col(j));
      val -= d * a.structure.slot(i, j);
      f.values.set_slot(i, j, val);
    }
  return f;
}

Subspace<Scalar> bl2_basis(const Algebra& a) {
  Index n = a.dim();
  RowEchelon<Scalar> ech(n * n * n);
  Mat d = Mat::Constant(n, n, Scalar(0));
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s) {
      d(s, r) = Scalar(1);  // d(e_r) = e_s
      ech.insert(coboundary_of(a, d).values.flatten());
      d(s, r) = Scalar(0);
    }
  return Subspace<Scalar>::from_matrix_rows(ech.to_matrix());
}

std::vector<TripleDefect> cocycle_defects(const Algebra& a, const Cochain2& f) {
  Index n = a.dim();
  if (f.dim() != n) throw Error("cocycle_defects: cochain dimension mismatch");
  std::vector<TripleDefect> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vec d = bracket_ev(a, i, f.values.slot(j, k));
        d -= bracket_ve(a, f.values.slot(i, j), k);
        d += bracket_ve(a, f.values.slot(i, k), j);
        d += f.apply_ev(i, a.structure.slot(j, k));
        d -= f.apply_ve(a.structure.slot(i, j), k);
        d += f.apply_ve(a.structure.slot(i, k), j);
        if (!is_zero_vector(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

namespace {

// Sparse slices of the structure tensor used to assemble the degree-2
// constraint matrix without scanning zeros.
struct StructureSlices {
  // by_left_out[i][c] = {(m, C(i,m,c))}, by_mid_out[j][c] = {(m, C(m,j,c))}
  std::vector<std::vector<std::vector<std::pair<Index, Scalar>>>> by_left_out;
  std::vector<std::vector<std::vector<std::pair<Index, Scalar>>>> by_mid_out;
  // rows[i][j] = {(k, C(i,j,k))}
  std::vector<std::vector<std::vector<std::pair<Index, Scalar>>>> rows;

  explicit StructureSlices(const Algebra& a) {
    Index n = a.dim();
    by_left_out.assign(n, std::vector<std::vector<std::pair<Index, Scalar>>>(n));
    by_mid_out.assign(n, std::vector<std::vector<std::pair<Index, Scalar>>>(n));
    rows.assign(n, std::vector<std::vector<std::pair<Index, Scalar>>>(n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          const Scalar& c = a.structure.at(i, j, k);
          if (is_zero(c)) continue;
          rows[i][j].push_back({k, c});
          by_left_out[i][k].push_back({j, c});
          by_mid_out[j][k].push_back({i, c});
        }
  }
};

}  // namespace

Subspace<Scalar> zl2_basis(const Algebra& a) {
  Index n = a.dim();
  Index width = n * n * n;
  StructureSlices sl(a);
  RowEchelon<Scalar> ech(width);

  Vec row = Vec::Constant(width, Scalar(0));
  std::vector<Index> touched;
  touched.reserve(64);
  auto add = [&](Index fi, Index fj, Index fk, const Scalar& c) {
    Index pos = (fi * n + fj) * n + fk;
    if (is_zero(row[pos])) touched.push_back(pos);
    row[pos] += c;
  };

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index c = 0; c < n; ++c) {
          // coefficient of each unknown F(a,b,m) in equation (i,j,k,c)
          for (const auto& [m, val] : sl.by_left_out[i][c]) add(j, k, m, val);
          for (const auto& [m, val] : sl.by_mid_out[k][c]) add(i, j, m, -val);
          for (const auto& [m, val] : sl.by_mid_out[j][c]) add(i, k, m, val);
          for (const auto& [m, val] : sl.rows[j][k]) add(i, m, c, val);
          for (const auto& [m, val] : sl.rows[i][j]) add(m, k, c, -val);
          for (const auto& [m, val] : sl.rows[i][k]) add(m, j, c, val);
          if (!touched.empty()) {
            ech.insert(row);
            for (Index pos : touched) row[pos] = Scalar(0);
            touched.clear();
          }
        }
  return kernel_from_echelon(ech);
}

CohomologySpaces hl2(const Algebra& a) {
  CohomologySpaces out;
  out.bl2 = bl2_basis(a);
  out.zl2 = zl2_basis(a);
  auto complement = extend_to_basis(out.bl2, out.zl2);
  Index idx = 1;
  for (const Vec& v : complement) {
    out.hl2_reps.push_back(cochain_from_flat(a, "rep" + std::to_string(idx++), v));
  }
  return out;
}

Hl2Coordinates reduce_mod_bl2(const Algebra& a, const CohomologySpaces& spaces,
                              const Cochain2& f) {
  if (!cocycle_defects(a, f).empty()) throw Error("reduce_mod_bl2: input is not a cocycle");
  Index n3 = a.dim() * a.dim() * a.dim();
  Index k = static_cast<Index>(spaces.hl2_reps.size());
  Index b = spaces.bl2.dim();
  Index width = n3 + k + b;

  RowEchelon<Scalar> ech(width);
  auto tagged = [&](const Vec& head, Index tag) {
    Vec v = Vec::Constant(width, Scalar(0));
    v.head(n3) = head;
    v[n3 + tag] = Scalar(1);
    return v;
  };
  for (Index i = 0; i < k; ++i) ech.insert(tagged(spaces.hl2_reps[i].values.flatten(), i));
  for (Index i = 0; i < b; ++i) ech.insert(tagged(spaces.bl2.basis_row(i), k + i));

  Vec probe = Vec::Constant(width, Scalar(0));
  probe.head(n3) = f.values.flatten();
  ech.reduce(probe);
  for (Index i = 0; i < n3; ++i)
    if (!is_zero(probe[i]))
      throw Error("reduce_mod_bl2: cocycle not in span of representatives and coboundaries");

  Hl2Coordinates out;
  out.hl2_coords = Vec::Constant(k, Scalar(0));
  out.coboundary_coords = Vec::Constant(b, Scalar(0));
  for (Index i = 0; i < k; ++i) out.hl2_coords[i] = -probe[n3 + i];
  for (Index i = 0; i < b; ++i) out.coboundary_coords[i] = -probe[n3 + k + i];
  return out;
}

Cochain2 cochain_from_flat(const Algebra& a, const std::string& name, const Vec& flat) {
  Cochain2 f(name, a);
  f.values = Tensor3::from_flat(flat, a.dim(), a.dim(), a.dim());
  return f;
}

Cochain2 bracket_cochain(const Algebra& a) {
  Cochain2 f("mu", a);
  f.values = a.structure;
  return f;
}

}  // namespace leibniz
