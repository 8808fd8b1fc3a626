#pragma once

#include "gohom/algebra.hpp"
#include "gohom/representation.hpp"

namespace gohom {

/// Injective algebra homomorphism k -> g in coordinates: map is dim(g) x dim(k).
struct Embedding {
  AlgebraPtr source;
  AlgebraPtr target;
  MatrixXd map;

  VectorXd operator()(const VectorXd& z) const { return map * z; }
  /// Max relative bracket-compatibility residual over basis pairs.
  double homomorphism_residual() const;
};

Embedding identity_embedding(AlgebraPtr alg);
/// Natural block inclusions: so(m) into so(n) (m <= n, top-left block) and
/// so(n) into realified su(n) (real skew part).
Embedding block_embedding(AlgebraPtr k, AlgebraPtr g);
/// k -> so(module_dim) through a skew-symmetric representation; the target
/// so algebra is built internally.
Embedding embedding_from_rep(const Representation& rep);

/// Constant c with B_k = c * B_g restricted to the embedded copy.
/// Throws NonConstantRatio when the ratio varies across basis directions.
double killing_ratio(const Embedding& emb, double spread_tol = 1e-8);

/// (g1 + g2) / diagonal k at the Lie algebra level: B-orthogonal blocks
/// h = {(Z,Z)}, m0 = {(Z, -(c2/c1) Z)}, m1 = {(P,0)}, m2 = {(0,P)}.
/// Ambient elements are coordinate vectors of length dim g1 + dim g2.
class ReductiveSpace {
 public:
  ReductiveSpace(AlgebraPtr k, AlgebraPtr g1, Embedding emb1, AlgebraPtr g2,
                 Embedding emb2);

  const AlgebraPtr& k() const { return k_; }
  const AlgebraPtr& g1() const { return g1_; }
  const AlgebraPtr& g2() const { return g2_; }
  const Embedding& emb1() const { return emb1_; }
  const Embedding& emb2() const { return emb2_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  bool same_group() const { return same_group_; }

  int ambient_dim() const { return d1_ + d2_; }
  int m_dim() const { return static_cast<int>(m_basis_.cols()); }
  int m0_dim() const { return k_->dim(); }
  int m1_dim() const { return static_cast<int>(p1_basis_.cols()); }
  int m2_dim() const { return static_cast<int>(p2_basis_.cols()); }

  /// B-orthonormal block bases as columns (ambient coordinates).
  const MatrixXd& h_basis() const { return h_basis_; }
  const MatrixXd& m0_basis() const { return m0_basis_; }
  const MatrixXd& m1_basis() const { return m1_basis_; }
  const MatrixXd& m2_basis() const { return m2_basis_; }
  /// Concatenation [m0 m1 m2].
  const MatrixXd& m_basis() const { return m_basis_; }

  /// Diagonal inclusion k -> g, Z -> (emb1 Z, emb2 Z).
  VectorXd diag_embed(const VectorXd& z) const;

  VectorXd bracket(const VectorXd& u, const VectorXd& v) const;
  double inner(const VectorXd& u, const VectorXd& v) const;  // ambient B
  double norm(const VectorXd& u) const;

  /// B-coordinates of u against the m (resp. h) basis columns.
  VectorXd m_coords(const VectorXd& u) const;
  VectorXd h_coords(const VectorXd& u) const;
  VectorXd from_m_coords(const VectorXd& c) const { return m_basis_ * c; }
  VectorXd project_m(const VectorXd& u) const { return m_basis_ * m_coords(u); }

  /// k-element K0 with m0-component of u equal to (emb1 K0, -(c2/c1) emb2 K0).
  VectorXd m0_k_component(const VectorXd& u) const;

  /// Ambient minus Killing form and its upper Cholesky factor (B = Lt^T Lt).
  const MatrixXd& B() const { return B_; }
  const MatrixXd& ambient_chol_t() const { return Lt_; }

  /// Max block-orthogonality residual (off-diagonal Gram entries).
  double gram_residual() const;
  /// Max residual of [h, m_j] projected onto the complementary blocks.
  double ad_invariance_residual() const;

 private:
  AlgebraPtr k_, g1_, g2_;
  Embedding emb1_, emb2_;
  int d1_, d2_;
  double c1_, c2_;
  bool same_group_;
  MatrixXd h_basis_, m0_basis_, m1_basis_, m2_basis_, m_basis_;
  MatrixXd p1_basis_, p2_basis_;  // within g1 / g2 coordinates
  MatrixXd B_;                    // ambient minus Killing form (block diagonal)
  MatrixXd Lt_;                   // upper Cholesky factor of B_
  MatrixXd Bm_, Bh_;              // B * m_basis, B * h_basis
  MatrixXd emb1_pinv_;
};

using SpacePtr = std::shared_ptr<const ReductiveSpace>;

SpacePtr build_pair_space(AlgebraPtr k, AlgebraPtr g1, const Embedding& emb1,
                          AlgebraPtr g2, const Embedding& emb2);

}  // namespace gohom
