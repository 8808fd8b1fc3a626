#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "gohom/isotropy.hpp"

using namespace gohom;

TEST_CASE("stabilizer at explicit points") {
  auto so5 = build_classical("so", 5);
  auto def = defining_rep(so5);
  StabilizerReport r = stabilizer_at(def, VectorXd::Unit(5, 0));
  CHECK(r.dim == 6);  // so(4)

  // The invariant direction of sym2 (the quadratic form) is fixed by all of k.
  auto so3 = build_classical("so", 3);
  auto s2 = sym2_rep(defining_rep(so3));
  VectorXd q = VectorXd::Zero(6);
  q[0] = q[3] = q[5] = 1.0;  // coordinates of the identity matrix
  CHECK(stabilizer_at(s2, q).dim == 3);

  CHECK_THROWS_AS(stabilizer_at(def, VectorXd::Zero(5)), Error);
}

TEST_CASE("generic stabilizers reproduce the expected dimensions") {
  struct Row {
    std::string family;
    int n;
    std::string tree;
    int dim;
    StabilizerClass cls;
  };
  std::vector<Row> rows = {
      {"so", 5, "defining", 6, StabilizerClass::other},       // so(4)
      {"so", 7, "defining", 15, StabilizerClass::other},      // so(6)
      {"su", 3, "adjoint", 2, StabilizerClass::torus},        // Cartan
      {"so", 7, "alt2(defining)", 3, StabilizerClass::torus}, // maximal torus
      {"sp", 3, "defining", 10, StabilizerClass::other},      // sp(2)
      {"so", 5, "traceless(sym2(defining))", 0, StabilizerClass::trivial},
  };
  for (const auto& row : rows) {
    auto rep = build_rep_tree(build_classical(row.family, row.n), row.tree);
    StabilizerReport r = generic_stabilizer(rep, 20, 42);
    CHECK(r.dim == row.dim);
    CHECK(r.cls == row.cls);
    CHECK(r.attained >= 18);  // >= 90% of trials hit the generic dimension
    if (r.cls == StabilizerClass::torus) CHECK(r.abelian_residual < 1e-8);
  }
}

TEST_CASE("stabilizer is a subalgebra (bracket closure)") {
  auto rep = build_rep_tree(build_classical("so", 7), "alt2(defining)");
  StabilizerReport r = generic_stabilizer(rep, 10, 42);
  REQUIRE(r.dim > 0);
  const auto& k = *rep.algebra;
  MatrixXd Lt = k.killing_chol().transpose();
  MatrixXd U = Lt * r.basis;  // orthonormal coordinates of the basis
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) {
      VectorXd br = Lt * k.bracket(r.basis.col(i), r.basis.col(j));
      VectorXd out = br - U * (U.transpose() * br);
      CHECK(out.norm() < 1e-8);
    }
}

TEST_CASE("dimension is invariant along the orbit") {
  auto rep = build_rep_tree(build_classical("so", 5), "defining");
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  VectorXd v(rep.module_dim);
  for (int i = 0; i < v.size(); ++i) v[i] = g(rng);
  v.normalize();
  int base = stabilizer_at(rep, v).dim;
  for (int move = 0; move < 10; ++move) {
    VectorXd z(rep.algebra->dim());
    for (int i = 0; i < z.size(); ++i) z[i] = g(rng);
    MatrixXd rho = MatrixXd::Zero(rep.module_dim, rep.module_dim);
    for (int i = 0; i < z.size(); ++i) rho += z[i] * rep.operators[i];
    v = (0.4 * rho).exp() * v;  // orthogonal move, keeps the orbit
    CHECK(stabilizer_at(rep, v).dim == base);
  }
}

TEST_CASE("pair classification") {
  StabilizerReport trivial;
  trivial.dim = 0;
  trivial.cls = StabilizerClass::trivial;
  StabilizerReport torus;
  torus.dim = 2;
  torus.cls = StabilizerClass::torus;
  StabilizerReport big;
  big.dim = 6;
  big.cls = StabilizerClass::other;
  CHECK(classify_pair(trivial, big) == "case1");
  CHECK(classify_pair(torus, big) == "case2");
  CHECK(classify_pair(big, big) == "neither");
}
