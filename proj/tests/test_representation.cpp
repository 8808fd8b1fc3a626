#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gohom/representation.hpp"

using namespace gohom;

namespace {
void check_valid(const Representation& r, int want_dim) {
  CHECK(r.module_dim == want_dim);
  REQUIRE(r.operators.size() == static_cast<size_t>(r.algebra->dim()));
  CHECK(r.homomorphism_residual() < 1e-9);
  CHECK(r.skew_residual() < 1e-10);
}
}  // namespace

TEST_CASE("defining and adjoint") {
  auto so5 = build_classical("so", 5);
  check_valid(defining_rep(so5), 5);
  check_valid(adjoint_rep(so5), 10);
  auto su3 = build_classical("su", 3);
  check_valid(defining_rep(su3), 6);  // realified
  check_valid(adjoint_rep(su3), 8);
  auto sp2 = build_classical("sp", 2);
  check_valid(defining_rep(sp2), 8);
  check_valid(adjoint_rep(sp2), 10);
}

TEST_CASE("squares, duals, sums, tensors") {
  auto so5 = build_classical("so", 5);
  auto def = defining_rep(so5);
  check_valid(sym2_rep(def), 15);
  check_valid(alt2_rep(def), 10);
  check_valid(dual_rep(def), 5);
  check_valid(direct_sum(def, def), 10);
  check_valid(tensor_rep(def, def), 25);

  auto so4 = build_classical("so", 4);
  CHECK_THROWS_AS(tensor_rep(def, defining_rep(so4)), AlgebraMismatch);
}

TEST_CASE("traceless part strips exactly the invariant directions") {
  auto so5 = build_classical("so", 5);
  auto s2 = sym2_rep(defining_rep(so5));
  auto t = traceless_part(s2);
  check_valid(t, 14);
  // alt2 of the defining rep of so(n) is the adjoint: no trivial summand.
  CHECK_THROWS_AS(traceless_part(alt2_rep(defining_rep(so5))), Error);

  auto so3 = build_classical("so", 3);
  check_valid(traceless_part(sym2_rep(defining_rep(so3))), 5);
}

TEST_CASE("adjoint rep kills nothing and acts like ad") {
  auto su3 = build_classical("su", 3);
  auto ad = adjoint_rep(su3);
  // In B-orthonormal coordinates u = L^T v, rho(z) u = L^T [z, v].
  MatrixXd Lt = su3->killing_chol().transpose();
  for (int i = 0; i < su3->dim(); ++i)
    for (int j = 0; j < su3->dim(); ++j) {
      VectorXd v = VectorXd::Unit(su3->dim(), j);
      VectorXd lhs = ad.operators[i] * (Lt * v);
      VectorXd rhs = Lt * su3->bracket(VectorXd::Unit(su3->dim(), i), v);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("rep tree parsing") {
  auto so5 = build_classical("so", 5);
  CHECK(build_rep_tree(so5, "defining").module_dim == 5);
  CHECK(build_rep_tree(so5, "adjoint").module_dim == 10);
  CHECK(build_rep_tree(so5, "traceless(sym2(defining))").module_dim == 14);
  CHECK(build_rep_tree(so5, "alt2(defining)").module_dim == 10);
  CHECK(build_rep_tree(so5, "oplus(defining,adjoint)").module_dim == 15);
  CHECK(build_rep_tree(so5, "tensor(defining,defining)").module_dim == 25);
  CHECK(build_rep_tree(so5, "dual(defining)").module_dim == 5);
  CHECK_THROWS_AS(build_rep_tree(so5, "spin"), Error);
  CHECK_THROWS_AS(build_rep_tree(so5, "sym2(defining"), Error);
}
