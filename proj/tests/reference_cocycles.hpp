#pragma once

#include "leibniz/cohomology.hpp"

// Reference cocycle bases and integrable-family data for the catalog
// algebras, keyed by basis labels so the tables stay readable.
namespace testsupport {

using namespace leibniz;

inline Cochain2 make_cochain(const Algebra& a, const std::string& name,
                             std::initializer_list<std::tuple<const char*, const char*,
                                                              const char*, Scalar>> entries) {
  Cochain2 f(name, a);
  for (const auto& [x, y, z, c] : entries) {
    auto i = a.label_index(x), j = a.label_index(y), k = a.label_index(z);
    if (!i || !j || !k) throw Error("make_cochain: unknown label");
    f.set(*i, *j, *k, c);
  }
  return f;
}

// --- L1 ---------------------------------------------------------------

inline std::vector<Cochain2> l1_cocycles(const Algebra& l1) {
  Cochain2 phi1 = make_cochain(l1, "phi1",
                               {{"X1", "J", "X1", frac(1)},
                                {"X2", "J", "X2", frac(1)},
                                {"X3", "J", "X3", frac(1)}});
  Cochain2 phi2 = make_cochain(l1, "phi2",
                               {{"Pm", "Pp", "J", frac(1)},
                                {"Pp", "Pm", "J", frac(-1)},
                                {"X2", "Pm", "X1", ifrac(-1, 2)},
                                {"X1", "T", "X1", frac(1, 12)},
                                {"X2", "T", "X2", frac(1, 12)},
                                {"X3", "T", "X3", frac(-1, 6)}});
  Cochain2 phi3 = make_cochain(l1, "phi3",
                               {{"T", "Pp", "Pp", frac(1)},
                                {"T", "Pm", "Pm", frac(-1)},
                                {"X2", "Pm", "X1", ifrac(1)},
                                {"Pp", "T", "Pp", frac(-1)},
                                {"Pm", "T", "Pm", frac(1)},
                                {"X1", "T", "X1", frac(1, 2)},
                                {"X2", "T", "X2", frac(-1, 2)}});
  return {phi1, phi2, phi3};
}

// --- L2 ---------------------------------------------------------------

// The displayed (X1,T) coefficient of phi2 is +1/12, which fails the cocycle
// identity at (X1,Pp,T); the cocycle equations admit exactly one solution on
// this support and it carries -1/12. l2_cocycles returns the corrected table,
// l2_phi2_displayed the failing variant for negative tests.
inline Cochain2 l2_phi2_displayed(const Algebra& l2) {
  return make_cochain(l2, "phi2-displayed",
                      {{"Pp", "Pm", "J", frac(-1)},
                       {"Pm", "Pp", "J", frac(1)},
                       {"X2", "Pm", "X1", ifrac(-1, 2)},
                       {"X1", "T", "X1", frac(1, 12)},
                       {"X2", "T", "X2", frac(-1, 12)},
                       {"X3", "T", "X3", frac(1, 6)}});
}

inline std::vector<Cochain2> l2_cocycles(const Algebra& l2) {
  Cochain2 phi1 = make_cochain(l2, "phi1",
                               {{"X1", "J", "X1", frac(1)},
                                {"X2", "J", "X2", frac(1)},
                                {"X3", "J", "X3", frac(1)}});
  Cochain2 phi2 = make_cochain(l2, "phi2",
                               {{"Pp", "Pm", "J", frac(-1)},
                                {"Pm", "Pp", "J", frac(1)},
                                {"X2", "Pm", "X1", ifrac(-1, 2)},
                                {"X1", "T", "X1", frac(-1, 12)},
                                {"X2", "T", "X2", frac(-1, 12)},
                                {"X3", "T", "X3", frac(1, 6)}});
  Cochain2 phi3 = make_cochain(l2, "phi3",
                               {{"Pp", "T", "Pp", frac(-1)},
                                {"T", "Pp", "Pp", frac(1)},
                                {"Pm", "T", "Pm", frac(1)},
                                {"T", "Pm", "Pm", frac(-1)},
                                {"X2", "Pm", "X1", ifrac(1)},
                                {"X1", "T", "X1", frac(1, 2)},
                                {"X2", "T", "X2", frac(-1, 2)}});
  return {phi1, phi2, phi3};
}

// --- L(1,0) and L(0,1) --------------------------------------------------

inline Cochain2 l10_cocycle(const Algebra& a) {
  return make_cochain(a, "phi",
                      {{"P1", "P1", "X1", frac(1)},
                       {"T", "P1", "X3", frac(3)},
                       {"P2", "P2", "X1", frac(1)},
                       {"T", "P2", "X2", frac(-3)},
                       {"J", "T", "X1", frac(2)},
                       {"P1", "T", "X3", frac(-2)},
                       {"P2", "T", "X2", frac(2)}});
}

inline Cochain2 l01_cocycle(const Algebra& a) {
  return make_cochain(a, "phi", {{"J", "J", "X4", frac(1)}});
}

// --- L(0,0) -------------------------------------------------------------

inline std::vector<Cochain2> l00_cocycles(const Algebra& a) {
  Cochain2 phi1 = make_cochain(a, "phi1", {{"J", "J", "X4", frac(1)}});
  Cochain2 phi2 = make_cochain(a, "phi2",
                               {{"P2", "J", "P2", frac(1)},
                                {"T", "J", "T", frac(1)},
                                {"X3", "J", "X3", frac(1)},
                                {"X4", "J", "X4", frac(1)},
                                {"J", "P2", "P2", frac(-1)},
                                {"J", "T", "T", frac(-1)}});
  Cochain2 phi3 = make_cochain(a, "phi3",
                               {{"X1", "J", "X1", frac(1)},
                                {"X3", "J", "X3", frac(2)},
                                {"X4", "J", "X4", frac(1)},
                                {"X1", "P2", "X2", frac(1)},
                                {"X3", "P2", "X4", frac(-1)}});
  Cochain2 phi4 = make_cochain(a, "phi4",
                               {{"P1", "P1", "X1", frac(1)},
                                {"T", "P1", "X3", frac(3)},
                                {"P2", "P2", "X1", frac(1)},
                                {"T", "P2", "X2", frac(-3)},
                                {"J", "T", "X1", frac(2)},
                                {"P1", "T", "X3", frac(-2)},
                                {"P2", "T", "X2", frac(2)}});
  Cochain2 phi5 = make_cochain(a, "phi5",
                               {{"P2", "P1", "J", frac(1)},
                                {"X2", "P1", "X1", frac(1, 4)},
                                {"X4", "P1", "X3", frac(-1, 4)},
                                {"P1", "P2", "J", frac(-1)},
                                {"X3", "P2", "X1", frac(1, 4)},
                                {"X4", "P2", "X2", frac(1, 4)},
                                {"X2", "T", "X3", frac(-1, 2)},
                                {"X3", "T", "X2", frac(1, 2)}});
  Cochain2 phi6 = make_cochain(a, "phi6",
                               {{"T", "P1", "P2", frac(1)},
                                {"X2", "P1", "X1", frac(-1, 4)},
                                {"X4", "P1", "X3", frac(1, 4)},
                                {"T", "P2", "P1", frac(-1)},
                                {"X3", "P2", "X1", frac(-1, 4)},
                                {"X4", "P2", "X2", frac(-1, 4)},
                                {"P1", "T", "P2", frac(-1)},
                                {"P2", "T", "P1", frac(1)},
                                {"X2", "T", "X3", frac(-1, 2)},
                                {"X3", "T", "X2", frac(1, 2)}});
  Cochain2 phi7 = make_cochain(a, "phi7",
                               {{"P1", "X1", "P1", frac(1)},
                                {"P2", "X1", "P2", frac(1)},
                                {"T", "X1", "T", frac(2)},
                                {"X2", "X1", "X2", frac(1)},
                                {"X3", "X1", "X3", frac(1)},
                                {"X4", "X1", "X4", frac(2)},
                                {"J", "X2", "P2", frac(-1)},
                                {"P2", "X2", "T", frac(1)},
                                {"X1", "X2", "X2", frac(-1)},
                                {"X3", "X2", "X4", frac(1)},
                                {"J", "X3", "P1", frac(1)},
                                {"P1", "X3", "T", frac(-1)},
                                {"X1", "X3", "X3", frac(-1)},
                                {"X2", "X3", "X4", frac(-1)},
                                {"X1", "X4", "X4", frac(-2)}});
  return {phi1, phi2, phi3, phi4, phi5, phi6, phi7};
}

// --- M(1) -----------------------------------------------------------------

inline std::vector<Cochain2> m1_cocycles(const Algebra& a) {
  Cochain2 phi1 = make_cochain(a, "phi1",
                               {{"X3", "Pp", "X4", frac(1)}, {"X3", "T", "X2", ifrac(1, 2)}});
  Cochain2 phi2 = make_cochain(a, "phi2",
                               {{"Pp", "J", "Pp", frac(1)},
                                {"T", "J", "T", frac(1)},
                                {"X2", "J", "X2", frac(1)},
                                {"X4", "J", "X4", frac(1)},
                                {"J", "Pp", "Pp", frac(-1)},
                                {"J", "T", "T", frac(-1)}});
  Cochain2 phi3 = make_cochain(a, "phi3",
                               {{"Pm", "J", "Pm", frac(1)},
                                {"T", "J", "T", frac(1)},
                                {"X3", "J", "X3", frac(-1)},
                                {"X4", "J", "X4", frac(-1)},
                                {"J", "Pm", "Pm", frac(-1)},
                                {"J", "T", "T", frac(-1)}});
  Cochain2 phi4 = make_cochain(a, "phi4",
                               {{"X1", "J", "X1", frac(1)},
                                {"X2", "J", "X2", frac(1)},
                                {"X3", "J", "X3", frac(1)},
                                {"X4", "J", "X4", frac(1)}});
  return {phi1, phi2, phi3, phi4};
}

// --- M(0) -----------------------------------------------------------------

inline std::vector<Cochain2> m0_cocycles(const Algebra& a) {
  Cochain2 phi1 = make_cochain(a, "phi1", {{"J", "J", "X2", frac(1)}});
  Cochain2 phi2 = make_cochain(a, "phi2", {{"J", "X3", "X2", frac(1)}});
  Cochain2 phi3 = make_cochain(a, "phi3",
                               {{"X3", "Pp", "X4", frac(1)}, {"X3", "T", "X2", ifrac(1, 2)}});
  Cochain2 phi4 = make_cochain(a, "phi4",
                               {{"Pm", "Pp", "J", frac(1)},
                                {"Pp", "Pm", "J", frac(-1)},
                                {"X2", "Pm", "X1", ifrac(-1, 2)},
                                {"X4", "Pm", "X3", ifrac(-3, 2)},
                                {"X1", "T", "X1", frac(1, 4)},
                                {"X2", "T", "X2", frac(1, 4)},
                                {"X4", "T", "X4", frac(-1, 2)}});
  return {phi1, phi2, phi3, phi4};
}

inline Cochain2 combine(const Algebra& a, const std::string& name,
                        const std::vector<Cochain2>& basis, const Vec& coeffs) {
  Cochain2 out(name, a);
  for (Index i = 0; i < coeffs.size(); ++i)
    out.values.flat += coeffs[i] * basis[i].values.flat;
  return out;
}

}  // namespace testsupport
