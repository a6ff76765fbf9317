#include "leibniz/catalog.hpp"

namespace leibniz {

namespace {

Scalar get_param(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw Error("catalog: missing parameter '" + name + "'");
  return it->second;
}

Index get_int_param(const ParamMap& p, const std::string& name) {
  Scalar v = get_param(p, name);
  if (!v.is_real() || v.re().get_den() != 1)
    throw Error("catalog: parameter '" + name + "' must be an integer");
  if (!v.re().get_num().fits_slong_p())
    throw Error("catalog: parameter '" + name + "' out of range");
  return static_cast<Index>(v.re().get_num().get_si());
}

Algebra build_l1() {
  Algebra a("L1", {"J", "Pp", "Pm", "T", "X1", "X2", "X3"});
  a.add_product(0, 1, 1, ifrac(1));    // [J,Pp]=i Pp
  a.add_product(1, 0, 1, ifrac(-1));   // [Pp,J]=-i Pp
  a.add_product(0, 2, 2, ifrac(-1));   // [J,Pm]=-i Pm
  a.add_product(2, 0, 2, ifrac(1));    // [Pm,J]=i Pm
  a.add_product(1, 2, 3, ifrac(2));    // [Pp,Pm]=2i T
  a.add_product(2, 1, 3, ifrac(-2));   // [Pm,Pp]=-2i T
  a.add_product(4, 0, 4, ifrac(2, 3));   // [X1,J]=(2/3)i X1
  a.add_product(5, 0, 5, ifrac(-1, 3));  // [X2,J]=-(1/3)i X2
  a.add_product(6, 0, 6, ifrac(-1, 3));  // [X3,J]=-(1/3)i X3
  a.add_product(4, 1, 5, frac(1));       // [X1,Pp]=X2
  a.add_product(6, 2, 4, frac(1));       // [X3,Pm]=X1
  a.add_product(6, 3, 5, ifrac(1, 2));   // [X3,T]=(i/2) X2
  a.derive_field_tag();
  return a;
}

Algebra build_l2() {
  Algebra a("L2", {"J", "Pp", "Pm", "T", "X1", "X2", "X3"});
  a.add_product(0, 1, 1, ifrac(1));
  a.add_product(1, 0, 1, ifrac(-1));
  a.add_product(0, 2, 2, ifrac(-1));
  a.add_product(2, 0, 2, ifrac(1));
  a.add_product(1, 2, 3, ifrac(2));
  a.add_product(2, 1, 3, ifrac(-2));
  a.add_product(4, 0, 4, ifrac(1, 3));   // [X1,J]=(1/3)i X1
  a.add_product(5, 0, 5, ifrac(-2, 3));  // [X2,J]=-(2/3)i X2
  a.add_product(6, 0, 6, ifrac(1, 3));   // [X3,J]=(1/3)i X3
  a.add_product(4, 1, 5, frac(1));       // [X1,Pp]=X2
  a.add_product(5, 2, 6, frac(1));       // [X2,Pm]=X3
  a.add_product(4, 3, 6, ifrac(-1, 2));  // [X1,T]=-(i/2) X3
  a.derive_field_tag();
  return a;
}

RightModule build_sl3module1() {
  RightModule m("sl3module1", diamond_complex_12(), {"X1", "X2", "X3"});
  m.action.at(0, 0, 0) = ifrac(2, 3);
  m.action.at(1, 0, 1) = ifrac(-1, 3);
  m.action.at(2, 0, 2) = ifrac(-1, 3);
  m.action.at(0, 1, 1) = frac(1);
  m.action.at(2, 2, 0) = frac(1);
  m.action.at(2, 3, 1) = ifrac(1, 2);
  return m;
}

RightModule build_sl3module2() {
  RightModule m("sl3module2", diamond_complex_12(), {"X1", "X2", "X3"});
  m.action.at(0, 0, 0) = ifrac(1, 3);
  m.action.at(1, 0, 1) = ifrac(-2, 3);
  m.action.at(2, 0, 2) = ifrac(1, 3);
  m.action.at(0, 1, 1) = frac(1);
  m.action.at(1, 2, 2) = frac(1);
  m.action.at(0, 3, 2) = ifrac(-1, 2);
  return m;
}

RightModule build_sp4r() {
  RightModule m("sp4R", diamond_real(), {"X1", "X2", "X3", "X4"});
  m.action.at(0, 1, 1) = frac(1);   // (X1,P1)=X2
  m.action.at(0, 2, 2) = frac(1);   // (X1,P2)=X3
  m.action.at(0, 3, 3) = frac(2);   // (X1,T)=2X4
  m.action.at(1, 0, 2) = frac(-1);  // (X2,J)=-X3
  m.action.at(1, 2, 3) = frac(1);   // (X2,P2)=X4
  m.action.at(2, 0, 1) = frac(1);   // (X3,J)=X2
  m.action.at(2, 1, 3) = frac(-1);  // (X3,P1)=-X4
  return m;
}

RightModule build_sp4c() {
  RightModule m("sp4C", diamond_complex_12(), {"X1", "X2", "X3", "X4"});
  m.action.at(0, 0, 0) = ifrac(1);     // (X1,J)=i X1
  m.action.at(3, 0, 3) = ifrac(-1);    // (X4,J)=-i X4
  m.action.at(0, 1, 1) = frac(1);      // (X1,Pp)=X2
  m.action.at(2, 2, 0) = frac(1);      // (X3,Pm)=X1
  m.action.at(3, 2, 1) = frac(-1);     // (X4,Pm)=-X2
  m.action.at(2, 3, 1) = ifrac(1, 2);  // (X3,T)=(i/2) X2
  return m;
}

Mat unit3(Index r, Index c) {
  Mat m = Mat::Constant(3, 3, Scalar(0));
  m(r, c) = Scalar(1);
  return m;
}
Mat unit4(Index r, Index c) {
  Mat m = Mat::Constant(4, 4, Scalar(0));
  m(r, c) = Scalar(1);
  return m;
}
Mat diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat m = Mat::Constant(3, 3, Scalar(0));
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// images ordered by the domain basis (J, Pp, Pm, T)
MatrixEmbedding build_sl3_phi() {
  MatrixEmbedding e;
  e.name = "sl3-phi";
  e.domain = diamond_complex_12();
  e.images = {ifrac(1, 3) * diag3(frac(2), frac(-1), frac(-1)), unit3(0, 1), unit3(2, 0),
              ifrac(1, 2) * unit3(2, 1)};
  return e;
}

MatrixEmbedding build_sl3_psi(bool misprint) {
  MatrixEmbedding e;
  e.name = misprint ? "sl3-psi-misprint" : "sl3-psi";
  e.domain = diamond_complex_12();
  Mat t = misprint ? Mat(ifrac(-1, 2) * unit3(2, 0)) : Mat(ifrac(-1, 2) * unit3(0, 2));
  e.images = {ifrac(1, 3) * diag3(frac(1), frac(-2), frac(1)), unit3(0, 1), unit3(1, 2), t};
  return e;
}

MatrixEmbedding build_sp4r_theta() {
  MatrixEmbedding e;
  e.name = "sp4r-theta";
  e.domain = diamond_real();
  e.images = {Mat(unit4(2, 1) - unit4(1, 2)), Mat(unit4(0, 1) - unit4(2, 3)),
              Mat(unit4(0, 2) + unit4(1, 3)), Mat(frac(2) * unit4(0, 3))};
  return e;
}

MatrixEmbedding build_sp4c_eta(bool misprint) {
  MatrixEmbedding e;
  e.name = misprint ? "sp4c-eta-misprint" : "sp4c-eta";
  e.domain = diamond_complex_12();
  Mat j = Mat::Constant(4, 4, Scalar(0));
  j(0, 0) = ifrac(1);
  j(3, 3) = ifrac(-1);
  Mat t = misprint ? Mat(ifrac(1) * unit4(2, 1)) : Mat(ifrac(1, 2) * unit4(2, 1));
  e.images = {j, unit4(0, 1), Mat(unit4(2, 0) - unit4(3, 1)), t};
  return e;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> es;
  auto alg = [&](std::string name, std::string desc, std::function<Algebra(const ParamMap&)> b,
                 std::vector<ParamSpec> params = {}) {
    es.push_back({std::move(name), CatalogKind::algebra, std::move(params), std::move(desc),
                  [b](const ParamMap& p) { return CatalogItem(b(p)); }});
  };
  auto mod = [&](std::string name, std::string desc,
                 std::function<RightModule(const ParamMap&)> b, std::vector<ParamSpec> params = {}) {
    es.push_back({std::move(name), CatalogKind::module, std::move(params), std::move(desc),
                  [b](const ParamMap& p) { return CatalogItem(b(p)); }});
  };
  auto emb = [&](std::string name, std::string desc, std::function<MatrixEmbedding()> b) {
    es.push_back({std::move(name), CatalogKind::embedding, {}, std::move(desc),
                  [b](const ParamMap&) { return CatalogItem(b()); }});
  };

  alg("diamond-real", "4-dim real diamond Lie algebra", [](const ParamMap&) { return diamond_real(); });
  alg("diamond-complex-12", "complexified diamond in the Pp/Pm basis",
      [](const ParamMap&) { return diamond_complex_12(); });
  alg("diamond-complex-13", "complex diamond with weight +1/-1 action of J",
      [](const ParamMap&) { return diamond_complex_13(); });
  alg("heisenberg-h1", "3-dim Heisenberg Lie algebra",
      [](const ParamMap&) { return heisenberg_h1(); });
  alg("L1", "7-dim Leibniz algebra: complex diamond acting through sl3module1",
      [](const ParamMap&) { return build_l1(); });
  alg("L2", "7-dim Leibniz algebra: complex diamond acting through sl3module2",
      [](const ParamMap&) { return build_l2(); });
  alg(
      "L-family", "8-dim two-parameter Leibniz family over the real diamond",
      [](const ParamMap& p) { return l_family(get_param(p, "alpha1"), get_param(p, "alpha2")); },
      {{"alpha1", frac(1)}, {"alpha2", frac(1)}});
  const std::pair<long, long> reps[] = {{1, 0}, {1, 1}, {-1, 1}, {0, 0}, {0, 1}};
  for (auto [a1, a2] : reps) {
    std::string nm = "L(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
    long ca1 = a1, ca2 = a2;
    alg(nm, "representative of the L family",
        [ca1, ca2, nm](const ParamMap&) {
          Algebra a = l_family(frac(ca1), frac(ca2));
          a.name = nm;
          return a;
        });
  }
  alg(
      "M", "8-dim one-parameter Leibniz family over the complex diamond",
      [](const ParamMap& p) { return m_family(get_param(p, "alpha")); }, {{"alpha", frac(1)}});
  for (long av : {1L, 0L}) {
    std::string nm = "M(" + std::to_string(av) + ")";
    alg(nm, "representative of the M family", [av, nm](const ParamMap&) {
      Algebra a = m_family(frac(av));
      a.name = nm;
      return a;
    });
  }
  alg(
      "fock-algebra", "diamond extended by the degree-truncated polynomial module",
      [](const ParamMap& p) { return fock_algebra(get_int_param(p, "N")); }, {{"N", frac(4)}});
  mod(
      "fock-module", "degree-truncated polynomial module over diamond-complex-13",
      [](const ParamMap& p) { return fock_module(get_int_param(p, "N")); }, {{"N", frac(4)}});
  mod("sl3module1", "3-dim module from the first sl3 embedding",
      [](const ParamMap&) { return build_sl3module1(); });
  mod("sl3module2", "3-dim module from the second sl3 embedding",
      [](const ParamMap&) { return build_sl3module2(); });
  mod("sp4R", "4-dim module from the sp4(R) realization of the real diamond",
      [](const ParamMap&) { return build_sp4r(); });
  mod("sp4C", "4-dim module from the sp4(C) realization of the complex diamond",
      [](const ParamMap&) { return build_sp4c(); });
  emb("sl3-phi", "first embedding of the complex diamond into sl3", build_sl3_phi);
  emb("sl3-psi", "second embedding of the complex diamond into sl3 (corrected T image)",
      [] { return build_sl3_psi(false); });
  emb("sl3-psi-misprint", "second sl3 embedding with the misprinted T image; fails the check",
      [] { return build_sl3_psi(true); });
  emb("sp4r-theta", "embedding of the real diamond into sp4(R)", build_sp4r_theta);
  emb("sp4c-eta", "embedding of the complex diamond into sp4(C) (corrected T coefficient)",
      [] { return build_sp4c_eta(false); });
  emb("sp4c-eta-misprint", "sp4(C) embedding with the misprinted T coefficient; fails the check",
      [] { return build_sp4c_eta(true); });
  return es;
}

}  // namespace

Algebra l_family(const Scalar& alpha1, const Scalar& alpha2) {
  Algebra a("L-family", {"J", "P1", "P2", "T", "X1", "X2", "X3", "X4"});
  a.add_product(0, 1, 2, frac(1));
  a.add_product(1, 0, 2, frac(-1));
  a.add_product(0, 2, 1, frac(-1));
  a.add_product(2, 0, 1, frac(1));
  a.add_product(1, 2, 3, frac(1));
  a.add_product(2, 1, 3, frac(-1));
  a.add_product(0, 0, 7, alpha1);             // [J,J]=a1 X4
  a.add_product(1, 1, 4, alpha2);             // [P1,P1]=a2 X1
  a.add_product(2, 2, 4, alpha2);             // [P2,P2]=a2 X1
  a.add_product(0, 3, 4, frac(2) * alpha2);   // [J,T]=2 a2 X1
  a.add_product(1, 3, 6, frac(-2) * alpha2);  // [P1,T]=-2 a2 X3
  a.add_product(3, 1, 6, frac(3) * alpha2);   // [T,P1]=3 a2 X3
  a.add_product(2, 3, 5, frac(2) * alpha2);   // [P2,T]=2 a2 X2
  a.add_product(3, 2, 5, frac(-3) * alpha2);  // [T,P2]=-3 a2 X2
  a.add_product(4, 1, 5, frac(1));            // [X1,P1]=X2
  a.add_product(4, 2, 6, frac(1));            // [X1,P2]=X3
  a.add_product(4, 3, 7, frac(2));            // [X1,T]=2 X4
  a.add_product(5, 0, 6, frac(-1));           // [X2,J]=-X3
  a.add_product(5, 2, 7, frac(1));            // [X2,P2]=X4
  a.add_product(6, 0, 5, frac(1));            // [X3,J]=X2
  a.add_product(6, 1, 7, frac(-1));           // [X3,P1]=-X4
  a.derive_field_tag();
  return a;
}

Algebra m_family(const Scalar& alpha) {
  Algebra a("M", {"J", "Pp", "Pm", "T", "X1", "X2", "X3", "X4"});
  a.add_product(0, 1, 1, ifrac(1));
  a.add_product(1, 0, 1, ifrac(-1));
  a.add_product(0, 2, 2, ifrac(-1));
  a.add_product(2, 0, 2, ifrac(1));
  a.add_product(1, 2, 3, ifrac(2));
  a.add_product(2, 1, 3, ifrac(-2));
  a.add_product(0, 0, 5, alpha);       // [J,J]=alpha X2
  a.add_product(4, 0, 4, ifrac(1));    // [X1,J]=i X1
  a.add_product(7, 0, 7, ifrac(-1));   // [X4,J]=-i X4
  a.add_product(4, 1, 5, frac(1));     // [X1,Pp]=X2
  a.add_product(6, 2, 4, frac(1));     // [X3,Pm]=X1
  a.add_product(7, 2, 5, frac(-1));    // [X4,Pm]=-X2
  a.add_product(6, 3, 5, ifrac(1, 2)); // [X3,T]=(i/2) X2
  a.derive_field_tag();
  return a;
}

Algebra fock_algebra(Index degree) {
  if (degree < 2) throw Error("fock_algebra: degree must be at least 2");
  std::vector<std::string> labels = {"one", "x", "del", "e"};
  for (Index t = 0; t <= degree; ++t) labels.push_back("x" + std::to_string(t));
  Algebra a("fock-algebra", labels);
  a.set_antisymmetric_pair(3, 1, 1, frac(1));   // [e,x]=x
  a.set_antisymmetric_pair(3, 2, 2, frac(-1));  // [e,del]=-del
  a.set_antisymmetric_pair(1, 2, 0, frac(1));   // [x,del]=one
  for (Index t = 0; t <= degree; ++t) {
    Index idx = 4 + t;
    a.add_product(idx, 0, idx, frac(1));                       // [x^t,one]=x^t
    if (t < degree) a.add_product(idx, 1, idx + 1, frac(1));   // [x^t,x]=x^{t+1}
    if (t > 0) a.add_product(idx, 2, idx - 1, frac(t));        // [x^t,del]=t x^{t-1}
    a.add_product(idx, 3, idx, frac(-t));                      // [x^t,e]=-t x^t
  }
  a.derive_field_tag();
  return a;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

CatalogItem catalog_build(const std::string& name, const ParamMap& overrides) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw Error("catalog: unknown entry '" + name + "'");
  ParamMap params;
  for (const auto& spec : e->params) params[spec.name] = spec.default_value;
  for (const auto& [k, v] : overrides) {
    if (!params.count(k)) throw Error("catalog: entry '" + name + "' has no parameter '" + k + "'");
    params[k] = v;
  }
  return e->build(params);
}

Algebra catalog_algebra(const std::string& name, const ParamMap& overrides) {
  CatalogItem item = catalog_build(name, overrides);
  if (auto* a = std::get_if<Algebra>(&item)) return *a;
  throw Error("catalog: entry '" + name + "' is not an algebra");
}

RightModule catalog_module(const std::string& name, const ParamMap& overrides) {
  CatalogItem item = catalog_build(name, overrides);
  if (auto* m = std::get_if<RightModule>(&item)) return *m;
  throw Error("catalog: entry '" + name + "' is not a module");
}

MatrixEmbedding catalog_embedding(const std::string& name, const ParamMap& overrides) {
  CatalogItem item = catalog_build(name, overrides);
  if (auto* e = std::get_if<MatrixEmbedding>(&item)) return *e;
  throw Error("catalog: entry '" + name + "' is not an embedding");
}

const char* catalog_kind_name(CatalogKind k) {
  switch (k) {
    case CatalogKind::algebra: return "algebra";
    case CatalogKind::module: return "module";
    case CatalogKind::embedding: return "embedding";
  }
  return "?";
}

}  // namespace leibniz
