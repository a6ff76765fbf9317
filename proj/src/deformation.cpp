#include "leibniz/deformation.hpp"

#include <map>
#include <sstream>

namespace leibniz {

TrilinearDefect obstruction_tensor(const Cochain2& f, const Cochain2& g) {
  Index n = f.dim();
  if (g.dim() != n) throw Error("obstruction_tensor: cochain dimension mismatch");
  TrilinearDefect t(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vec v = f.apply_ev(i, g.values.slot(j, k));
        v -= f.apply_ve(g.values.slot(i, j), k);
        v += f.apply_ve(g.values.slot(i, k), j);
        for (Index c = 0; c < n; ++c)
          if (!is_zero(v[c])) t.at(i, j, k, c) = v[c];
      }
  return t;
}

TrilinearDefect symmetrized_obstruction(const Cochain2& f, const Cochain2& g) {
  TrilinearDefect t = obstruction_tensor(f, g);
  if (&f != &g) {
    TrilinearDefect s = obstruction_tensor(g, f);
    t.flat += s.flat;
  }
  return t;
}

ObstructionReport obstruction_report(const Algebra& a, const std::vector<Cochain2>& cocycles) {
  for (const auto& f : cocycles) {
    if (!cocycle_defects(a, f).empty())
      throw Error("obstruction_report: '" + f.name + "' is not a cocycle");
  }
  ObstructionReport rep;
  rep.cocycles = cocycles;
  Index k = static_cast<Index>(cocycles.size());
  std::map<std::pair<Index, Index>, Index> cell_of;
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) {
      TrilinearDefect t = i == j ? symmetrized_obstruction(cocycles[i], cocycles[i])
                                 : symmetrized_obstruction(cocycles[i], cocycles[j]);
      Index pair_index = static_cast<Index>(rep.sym_tensors.size());
      if (!t.is_zero()) {
        rep.quadratic_support.push_back({i, j});
        Index n = t.n;
        for (Index r = 0; r < t.flat.rows(); ++r)
          for (Index col = 0; col < n; ++col) {
            if (is_zero(t.flat(r, col))) continue;
            auto [it, fresh] = cell_of.try_emplace({r, col}, rep.cells.size());
            if (fresh) rep.cells.push_back({r, col, {}});
            rep.cells[it->second].terms.push_back({pair_index, t.flat(r, col)});
          }
      }
      rep.sym_tensors.push_back({i, j, std::move(t)});
    }
  return rep;
}

bool obstruction_vanishes_at(const ObstructionReport& report, const Vec& coeffs) {
  if (coeffs.size() != static_cast<Index>(report.cocycles.size()))
    throw Error("obstruction_vanishes_at: coefficient count mismatch");
  std::vector<Scalar> pair_products(report.sym_tensors.size(), Scalar(0));
  for (std::size_t t = 0; t < report.sym_tensors.size(); ++t) {
    const auto& [i, j, tensor] = report.sym_tensors[t];
    pair_products[t] = coeffs[i] * coeffs[j];
  }
  for (const auto& cell : report.cells) {
    Scalar acc(0);
    for (const auto& [pair_index, value] : cell.terms)
      if (!is_zero(pair_products[pair_index])) acc += pair_products[pair_index] * value;
    if (!is_zero(acc)) return false;
  }
  return true;
}

DeformResult deform(const Algebra& a, const std::vector<Cochain2>& cocycles, const Vec& coeffs) {
  if (coeffs.size() != static_cast<Index>(cocycles.size()))
    throw Error("deform: coefficient count mismatch");
  DeformResult out;
  out.algebra = a;
  out.algebra.name = a.name + "-deformed";
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (cocycles[i].dim() != a.dim()) throw Error("deform: cochain dimension mismatch");
    if (is_zero(coeffs[i])) continue;
    out.algebra.structure.flat += coeffs[i] * cocycles[i].values.flat;
  }
  out.algebra.derive_field_tag();
  out.defects = leibniz_defects(out.algebra);
  return out;
}

IntegrabilityVerdict subspace_integrable(const Algebra& a,
                                         const std::vector<Cochain2>& directions) {
  for (const auto& f : directions) {
    if (!cocycle_defects(a, f).empty())
      throw Error("subspace_integrable: '" + f.name + "' is not a cocycle");
  }
  IntegrabilityVerdict v;
  Index k = static_cast<Index>(directions.size());
  for (Index i = 0; i < k && v.integrable; ++i)
    for (Index j = i; j < k; ++j) {
      TrilinearDefect t = i == j ? symmetrized_obstruction(directions[i], directions[i])
                                 : symmetrized_obstruction(directions[i], directions[j]);
      if (!t.is_zero()) {
        v.integrable = false;
        v.failing_pair = {i, j};
        break;
      }
    }
  return v;
}

IntegrabilityVerdict subspace_integrable(const ObstructionReport& report,
                                         const std::vector<Index>& subset) {
  IntegrabilityVerdict v;
  for (Index a : subset) {
    if (a < 0 || a >= static_cast<Index>(report.cocycles.size()))
      throw Error("subspace_integrable: index out of range");
  }
  for (std::size_t x = 0; x < subset.size() && v.integrable; ++x)
    for (std::size_t y = x; y < subset.size(); ++y) {
      Index i = std::min(subset[x], subset[y]);
      Index j = std::max(subset[x], subset[y]);
      if (report.pair_supported(i, j)) {
        v.integrable = false;
        v.failing_pair = {i, j};
        break;
      }
    }
  return v;
}

std::string support_signature(const ObstructionReport& report) {
  std::ostringstream os;
  bool first = true;
  for (auto& [i, j] : report.quadratic_support) {
    if (!first) os << ",";
    first = false;
    os << "a" << (i + 1) << "*a" << (j + 1);
  }
  return os.str();
}

}  // namespace leibniz
