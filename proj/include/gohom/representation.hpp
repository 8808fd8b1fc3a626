#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gohom/algebra.hpp"

namespace gohom {

/// Real orthogonal representation: one skew-symmetric operator per algebra
/// basis element, acting on R^module_dim with the standard inner product.
struct Representation {
  AlgebraPtr algebra;
  int module_dim = 0;
  std::vector<MatrixXd> operators;
  std::string label;

  VectorXd apply(const VectorXd& z, const VectorXd& v) const;
  /// Max relative commutator residual over basis pairs.
  double homomorphism_residual() const;
  double skew_residual() const;
};

Representation defining_rep(AlgebraPtr alg);
/// Adjoint action expressed in a B-orthonormal basis (so operators are skew).
Representation adjoint_rep(AlgebraPtr alg);
Representation dual_rep(const Representation& rep);
Representation sym2_rep(const Representation& rep);
Representation alt2_rep(const Representation& rep);
Representation tensor_rep(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);
/// Removes every trivial (invariant) direction; for sym2 of a defining rep
/// this strips the invariant quadratic form.
Representation traceless_part(const Representation& rep);

/// Parses a construction tree such as "traceless(sym2(defining))",
/// "alt2(defining)", "adjoint", "tensor(defining,dual(defining))",
/// "oplus(defining,defining)".
Representation build_rep_tree(AlgebraPtr alg, const std::string& tree);

}  // namespace gohom
