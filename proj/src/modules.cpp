#include "leibniz/modules.hpp"

#include "leibniz/diamond.hpp"

namespace leibniz {

std::vector<ModuleDefect> right_module_defects(const Algebra& lie, const RightModule& mod) {
  if (!is_lie(lie).ok()) throw Error("right_module_defects: base is not a Lie algebra");
  return right_module_defects_if(lie, mod, [](Index, Index, Index) { return true; });
}

namespace {

Vec act_tensor(const Tensor3& t, Index first, const Vec& v) {
  // contraction over the middle index: w_q = sum_p t(first, p, q) v_p
  Vec w = Vec::Constant(t.c, Scalar(0));
  for (Index p = 0; p < t.b; ++p) {
    if (is_zero(v[p])) continue;
    for (Index q = 0; q < t.c; ++q) {
      const Scalar& c = t.at(first, p, q);
      if (!is_zero(c)) w[q] += v[p] * c;
    }
  }
  return w;
}

Vec act_tensor_right(const Tensor3& t, const Vec& v, Index second) {
  // w_q = sum_p t(p, second, q) v_p
  Vec w = Vec::Constant(t.c, Scalar(0));
  for (Index p = 0; p < t.a; ++p) {
    if (is_zero(v[p])) continue;
    for (Index q = 0; q < t.c; ++q) {
      const Scalar& c = t.at(p, second, q);
      if (!is_zero(c)) w[q] += v[p] * c;
    }
  }
  return w;
}

}  // namespace

std::vector<BimoduleDefect> leibniz_bimodule_defects(const Algebra& a, const Tensor3& left,
                                                     const Tensor3& right) {
  Index n = a.dim();
  Index m = right.a;
  if (left.a != n || left.b != m || left.c != m || right.b != n || right.c != m)
    throw Error("leibniz_bimodule_defects: action tensor shape mismatch");

  std::vector<BimoduleDefect> out;
  auto unit_m = [&](Index p) {
    Vec v = Vec::Constant(m, Scalar(0));
    v[p] = Scalar(1);
    return v;
  };

  for (Index p = 0; p < m; ++p) {
    Vec vp = unit_m(p);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        // [m,[x,y]] = [[m,x],y] - [[m,y],x]
        Vec lhs = Vec::Constant(m, Scalar(0));
        Vec bxy = a.structure.slot(x, y);
        for (Index t = 0; t < n; ++t)
          if (!is_zero(bxy[t])) lhs += bxy[t] * act_tensor_right(right, vp, t);
        Vec d1 = lhs - act_tensor_right(right, act_tensor_right(right, vp, x), y) +
                 act_tensor_right(right, act_tensor_right(right, vp, y), x);
        if (!is_zero_vector(d1)) out.push_back({BimoduleAxiom::module_first, p, x, y, d1});

        // [x,[m,y]] = [[x,m],y] - [[x,y],m]
        Vec d2 = act_tensor(left, x, act_tensor_right(right, vp, y)) -
                 act_tensor_right(right, act_tensor(left, x, vp), y);
        for (Index t = 0; t < n; ++t)
          if (!is_zero(bxy[t])) d2 += bxy[t] * act_tensor(left, t, vp);
        if (!is_zero_vector(d2)) out.push_back({BimoduleAxiom::middle, x, p, y, d2});

        // [x,[y,m]] = [[x,y],m] - [[x,m],y]
        Vec d3 = act_tensor(left, x, act_tensor(left, y, vp));
        for (Index t = 0; t < n; ++t)
          if (!is_zero(bxy[t])) d3 -= bxy[t] * act_tensor(left, t, vp);
        d3 += act_tensor_right(right, act_tensor(left, x, vp), y);
        if (!is_zero_vector(d3)) out.push_back({BimoduleAxiom::last, x, y, p, d3});
      }
  }
  return out;
}

Algebra semidirect(const Algebra& lie, const RightModule& mod, bool verify) {
  if (verify) {
    auto defects = right_module_defects(lie, mod);
    if (!defects.empty()) {
      const auto& d = defects.front();
      throw Error("semidirect: module axiom fails at (" + mod.basis[d.p] + "," + lie.basis[d.j] +
                  "," + lie.basis[d.k] + ")");
    }
  }
  Index n = lie.dim();
  Index m = mod.mdim();
  std::vector<std::string> labels = lie.basis;
  labels.insert(labels.end(), mod.basis.begin(), mod.basis.end());
  Algebra out(lie.name + "+" + mod.name, labels);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out.structure.at(i, j, k) = lie.structure.at(i, j, k);
  for (Index p = 0; p < m; ++p)
    for (Index j = 0; j < n; ++j)
      for (Index q = 0; q < m; ++q) out.structure.at(n + p, j, n + q) = mod.action.at(p, j, q);
  out.derive_field_tag();
  return out;
}

EmbeddingVerdict embedding_defects(const MatrixEmbedding& e) {
  if (!is_lie(e.domain).ok()) throw Error("embedding_defects: domain is not a Lie algebra");
  Index n = e.domain.dim();
  if (static_cast<Index>(e.images.size()) != n)
    throw Error("embedding_defects: one image per basis element required");
  Index s = e.image_size();
  for (const Mat& im : e.images)
    if (im.rows() != s || im.cols() != s) throw Error("embedding_defects: image shape mismatch");

  EmbeddingVerdict v;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Mat d = e.images[i] * e.images[j] - e.images[j] * e.images[i] -
              e.image_of(e.domain.structure.slot(i, j));
      bool zero = true;
      for (Index r = 0; r < s && zero; ++r)
        for (Index c = 0; c < s; ++c)
          if (!is_zero(d(r, c))) {
            zero = false;
            break;
          }
      if (!zero) {
        Vec flatd = Vec::Constant(s * s, Scalar(0));
        for (Index r = 0; r < s; ++r)
          for (Index c = 0; c < s; ++c) flatd[r * s + c] = d(r, c);
        v.defects.push_back({i, j, std::move(flatd)});
      }
    }
  v.homomorphism = v.defects.empty();

  Mat stacked = Mat::Constant(n, s * s, Scalar(0));
  for (Index i = 0; i < n; ++i)
    for (Index r = 0; r < s; ++r)
      for (Index c = 0; c < s; ++c) stacked(i, r * s + c) = e.images[i](r, c);
  v.injective = rank_of(stacked) == n;
  return v;
}

RightModule action_from_embedding(const MatrixEmbedding& e, ActionConvention convention) {
  auto verdict = embedding_defects(e);
  if (!verdict.homomorphism) throw Error("action_from_embedding: embedding has defects");
  Index s = e.image_size();
  std::vector<std::string> labels;
  for (Index p = 0; p < s; ++p) labels.push_back("X" + std::to_string(p + 1));
  RightModule mod(e.name + "-module", e.domain, labels);
  for (Index j = 0; j < e.domain.dim(); ++j)
    for (Index p = 0; p < s; ++p)
      for (Index q = 0; q < s; ++q)
        mod.action.at(p, j, q) =
            convention == ActionConvention::row ? e.images[j](p, q) : e.images[j](q, p);
  return mod;
}

RightModule fock_module(Index degree) {
  if (degree < 2) throw Error("fock_module: degree must be at least 2");
  std::vector<std::string> labels;
  for (Index t = 0; t <= degree; ++t) labels.push_back("x" + std::to_string(t));
  RightModule mod("fock-module", diamond_complex_13(), labels);
  // base order (J, P1, P2, T) acting as -t, mult-by-x, d/dx, identity
  for (Index t = 0; t <= degree; ++t) {
    mod.action.at(t, 0, t) = frac(-t);
    if (t + 1 <= degree) mod.action.at(t, 1, t + 1) = frac(1);
    if (t > 0) mod.action.at(t, 2, t - 1) = frac(t);
    mod.action.at(t, 3, t) = frac(1);
  }
  return mod;
}

}  // namespace leibniz
