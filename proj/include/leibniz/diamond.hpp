#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Real diamond Lie algebra, basis {J, P1, P2, T}:
/// [J,P1]=P2, [J,P2]=-P1, [P1,P2]=T (antisymmetric completion implied).
Algebra diamond_real();

/// Complexified diamond, basis {J, Pp, Pm, T}:
/// [J,Pp]=i Pp, [J,Pm]=-i Pm, [Pp,Pm]=2i T.
Algebra diamond_complex_12();

/// Complex diamond after the exponent-scaling change of basis, {J, P1, P2, T}:
/// [J,P1]=P1, [J,P2]=-P2, [P1,P2]=T.
Algebra diamond_complex_13();

/// Heisenberg algebra, basis {one, x, del}: [x,del]=one.
Algebra heisenberg_h1();

}  // namespace leibniz
