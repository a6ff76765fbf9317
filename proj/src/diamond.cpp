#include "leibniz/diamond.hpp"

namespace leibniz {

Algebra diamond_real() {
  Algebra a("diamond-real", {"J", "P1", "P2", "T"});
  a.set_antisymmetric_pair(0, 1, 2, frac(1));   // [J,P1]=P2
  a.set_antisymmetric_pair(0, 2, 1, frac(-1));  // [J,P2]=-P1
  a.set_antisymmetric_pair(1, 2, 3, frac(1));   // [P1,P2]=T
  a.derive_field_tag();
  return a;
}

Algebra diamond_complex_12() {
  Algebra a("diamond-complex-12", {"J", "Pp", "Pm", "T"});
  a.set_antisymmetric_pair(0, 1, 1, ifrac(1));   // [J,Pp]=i Pp
  a.set_antisymmetric_pair(0, 2, 2, ifrac(-1));  // [J,Pm]=-i Pm
  a.set_antisymmetric_pair(1, 2, 3, ifrac(2));   // [Pp,Pm]=2i T
  a.derive_field_tag();
  return a;
}

Algebra diamond_complex_13() {
  Algebra a("diamond-complex-13", {"J", "P1", "P2", "T"});
  a.set_antisymmetric_pair(0, 1, 1, frac(1));   // [J,P1]=P1
  a.set_antisymmetric_pair(0, 2, 2, frac(-1));  // [J,P2]=-P2
  a.set_antisymmetric_pair(1, 2, 3, frac(1));   // [P1,P2]=T
  a.derive_field_tag();
  return a;
}

Algebra heisenberg_h1() {
  Algebra a("heisenberg-h1", {"one", "x", "del"});
  a.set_antisymmetric_pair(1, 2, 0, frac(1));  // [x,del]=one
  a.derive_field_tag();
  return a;
}

}  // namespace leibniz
