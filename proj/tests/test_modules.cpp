#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "rng.hpp"

using namespace leibniz;

TEST_CASE("sl3module1 is a right module with the documented spot value") {
  Algebra d = diamond_complex_12();
  RightModule m = catalog_module("sl3module1");
  CHECK(right_module_defects(d, m).empty());

  // (X1,[J,Pp]) = i X2 agrees with ((X1,J),Pp) - ((X1,Pp),J)
  Vec x1 = Vec::Constant(3, Scalar(0));
  x1[0] = frac(1);
  Vec via_bracket = Vec::Constant(3, Scalar(0));
  Vec jp = d.structure.slot(0, 1);  // [J,Pp] = i Pp
  for (Index t = 0; t < 4; ++t)
    if (!is_zero(jp[t])) via_bracket += jp[t] * m.act(x1, t);
  CHECK(via_bracket[1] == ifrac(1));
  Vec rhs = m.act(m.act(x1, 0), 1) - m.act(m.act(x1, 1), 0);
  CHECK(is_zero_vector(Vec(via_bracket - rhs)));
}

TEST_CASE("zero action is a module, perturbed table is not") {
  Algebra d = diamond_complex_12();
  RightModule zero("zero", d, {"v1", "v2"});
  CHECK(right_module_defects(d, zero).empty());

  RightModule broken = catalog_module("sl3module1");
  broken.action.at(0, 1, 1) = frac(0);
  broken.action.at(0, 1, 2) = frac(1);  // (X1,Pp)=X3 instead of X2
  CHECK(!right_module_defects(d, broken).empty());

  CHECK_THROWS_AS(right_module_defects(diamond_real(), broken), Error);
}

TEST_CASE("bimodule axioms") {
  // adjoint actions of a Leibniz algebra on itself satisfy all three axioms
  Algebra l1 = catalog_algebra("L1");
  Tensor3 right = l1.structure;
  Tensor3 left = l1.structure;
  CHECK(leibniz_bimodule_defects(l1, left, right).empty());

  // a right module with zero left action over a Lie algebra
  Algebra d = diamond_complex_12();
  RightModule m = catalog_module("sl3module1");
  Tensor3 right_action = m.action;
  Tensor3 zero_left(4, 3, 3);
  CHECK(leibniz_bimodule_defects(d, zero_left, right_action).empty());

  // corrupting the action surfaces a located witness
  right_action.at(2, 3, 1) = frac(5);
  auto defects = leibniz_bimodule_defects(d, zero_left, right_action);
  CHECK(!defects.empty());
}

TEST_CASE("semidirect sums reproduce the seven-dimensional tables") {
  Algebra q1 = semidirect(diamond_complex_12(), catalog_module("sl3module1"));
  Algebra l1 = catalog_algebra("L1");
  CHECK(q1.structure == l1.structure);
  CHECK(q1.basis == l1.basis);

  Algebra q2 = semidirect(diamond_complex_12(), catalog_module("sl3module2"));
  CHECK(q2.structure == catalog_algebra("L2").structure);

  Algebra q3 = semidirect(diamond_real(), catalog_module("sp4R"));
  CHECK(q3.structure == catalog_algebra("L(0,0)").structure);

  Algebra q4 = semidirect(diamond_complex_12(), catalog_module("sp4C"));
  CHECK(q4.structure == catalog_algebra("M(0)").structure);
}

TEST_CASE("semidirect with the zero module is a direct sum with an abelian part") {
  Algebra d = diamond_real();
  RightModule zero("zero", d, {"v1", "v2"});
  Algebra s = semidirect(d, zero);
  CHECK(s.dim() == 6);
  CHECK(leibniz_defects(s).empty());
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      for (Index k = 0; k < 4; ++k) CHECK(s.structure.at(i, j, k) == d.structure.at(i, j, k));
  for (Index p = 4; p < 6; ++p)
    for (Index j = 0; j < 6; ++j) CHECK(s.structure.slot_is_zero(p, j));
  // module part sits inside the right annihilator
  auto ra = right_annihilator(s);
  for (Index p = 4; p < 6; ++p) {
    Vec v = Vec::Constant(6, Scalar(0));
    v[p] = frac(1);
    CHECK(ra.contains(v));
  }
}

TEST_CASE("embedding checks accept the corrected maps and reject the misprints") {
  for (const char* name : {"sl3-phi", "sl3-psi", "sp4r-theta", "sp4c-eta"}) {
    auto v = embedding_defects(catalog_embedding(name));
    CHECK(v.homomorphism);
    CHECK(v.injective);
  }
  CHECK(!embedding_defects(catalog_embedding("sl3-psi-misprint")).homomorphism);
  CHECK(!embedding_defects(catalog_embedding("sp4c-eta-misprint")).homomorphism);
}

TEST_CASE("the two sl3 embeddings have distinct stacked column spaces") {
  auto stack = [](const MatrixEmbedding& e) {
    Index s = e.image_size();
    Mat m = Mat::Constant(4 * s, s, Scalar(0));
    for (Index i = 0; i < 4; ++i) m.middleRows(i * s, s) = e.images[i];
    return Subspace<Scalar>::from_matrix_rows(Mat(m.transpose()));
  };
  CHECK(stack(catalog_embedding("sl3-phi")) != stack(catalog_embedding("sl3-psi")));
}

TEST_CASE("module tables arise from the embeddings under the row convention") {
  CHECK(action_from_embedding(catalog_embedding("sl3-phi"), ActionConvention::row).action ==
        catalog_module("sl3module1").action);
  CHECK(action_from_embedding(catalog_embedding("sl3-psi"), ActionConvention::row).action ==
        catalog_module("sl3module2").action);
  CHECK(action_from_embedding(catalog_embedding("sp4r-theta"), ActionConvention::row).action ==
        catalog_module("sp4R").action);
  CHECK(action_from_embedding(catalog_embedding("sp4c-eta"), ActionConvention::row).action ==
        catalog_module("sp4C").action);

  // the column convention does not reproduce the tables
  CHECK(!(action_from_embedding(catalog_embedding("sp4r-theta"), ActionConvention::column).action ==
          catalog_module("sp4R").action));

  // zero embedding gives the zero module
  MatrixEmbedding zero;
  zero.name = "zero";
  zero.domain = diamond_real();
  zero.images = {Mat::Constant(2, 2, Scalar(0)), Mat::Constant(2, 2, Scalar(0)),
                 Mat::Constant(2, 2, Scalar(0)), Mat::Constant(2, 2, Scalar(0))};
  CHECK(action_from_embedding(zero, ActionConvention::row).action.is_zero());
}

TEST_CASE("truncated polynomial module") {
  RightModule m = fock_module(4);
  CHECK(m.mdim() == 5);

  Vec x3 = Vec::Constant(5, Scalar(0));
  x3[3] = frac(1);
  Vec dx = m.act(x3, 2);  // action of P2 = d/dx
  CHECK(dx[2] == frac(3));

  Vec x0 = Vec::Constant(5, Scalar(0));
  x0[0] = frac(1);
  CHECK(is_zero_vector(m.act(x0, 0)));  // J acts by -t, zero on degree 0

  Vec x4 = Vec::Constant(5, Scalar(0));
  x4[4] = frac(1);
  CHECK(is_zero_vector(m.act(x4, 1)));  // truncation: x * x^N = 0

  // defects restricted to t <= N-2 vanish; any defect involves t >= N-1
  Index degree = 4;
  CHECK(right_module_defects_if(m.base, m, [&](Index p, Index, Index) {
          return p <= degree - 2;
        }).empty());
  for (const auto& d : right_module_defects(m.base, m)) CHECK(d.p >= degree - 1);

  CHECK_THROWS_AS(fock_module(1), Error);
}
