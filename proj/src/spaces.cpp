#include "gohom/spaces.hpp"

#include <cmath>
#include <limits>

namespace gohom {

double Embedding::homomorphism_residual() const {
  const int dk = source->dim();
  double worst = 0.0;
  for (int i = 0; i < dk; ++i)
    for (int j = i + 1; j < dk; ++j) {
      VectorXd lhs = map * source->bracket(VectorXd::Unit(dk, i), VectorXd::Unit(dk, j));
      VectorXd rhs = target->bracket(map.col(i), map.col(j));
      double s = std::max(rhs.cwiseAbs().maxCoeff(), 1.0);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / s);
    }
  return worst;
}

Embedding identity_embedding(AlgebraPtr alg) {
  return Embedding{alg, alg, MatrixXd::Identity(alg->dim(), alg->dim())};
}

Embedding block_embedding(AlgebraPtr k, AlgebraPtr g) {
  MatrixXd map(g->dim(), k->dim());
  const int Nk = k->matrix_size();
  const int Ng = g->matrix_size();
  if (k->family() == Family::so && g->family() == Family::so && g->n() >= k->n()) {
    for (int i = 0; i < k->dim(); ++i) {
      MatrixXd big = MatrixXd::Zero(Ng, Ng);
      big.topLeftCorner(Nk, Nk) = k->basis_mats()[i];
      map.col(i) = g->coordinates(big);
    }
  } else if (k->family() == Family::so && g->family() == Family::su &&
             g->n() == k->n()) {
    // Real skew matrices sit inside the realified su(n): M -> diag(M, M).
    for (int i = 0; i < k->dim(); ++i) {
      MatrixXd big = MatrixXd::Zero(Ng, Ng);
      big.topLeftCorner(Nk, Nk) = k->basis_mats()[i];
      big.bottomRightCorner(Nk, Nk) = k->basis_mats()[i];
      map.col(i) = g->coordinates(big);
    }
  } else {
    throw UnsupportedFamily("block_embedding: no natural block inclusion " +
                            k->name() + " -> " + g->name());
  }
  Embedding e{k, g, map};
  if (e.homomorphism_residual() > 1e-9)
    throw Error("block_embedding: homomorphism residual too large");
  return e;
}

Embedding embedding_from_rep(const Representation& rep) {
  if (rep.skew_residual() > 1e-10)
    throw NotSkewSymmetric("embedding_from_rep: operators not skew-symmetric");
  AlgebraPtr target = build_classical(Family::so, rep.module_dim);
  MatrixXd map(target->dim(), rep.algebra->dim());
  for (int i = 0; i < rep.algebra->dim(); ++i)
    map.col(i) = target->coordinates(rep.operators[i]);
  Embedding e{rep.algebra, target, map};
  if (e.homomorphism_residual() > 1e-9)
    throw Error("embedding_from_rep: homomorphism residual too large");
  return e;
}

double killing_ratio(const Embedding& emb, double spread_tol) {
  const auto& k = *emb.source;
  const auto& g = *emb.target;
  MatrixXd Kk = k.killing();
  MatrixXd Kg_pull = emb.map.transpose() * g.killing() * emb.map;
  // Ratio over every basis direction, diagonal entries first.
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int i = 0; i < k.dim(); ++i) {
    double r = Kk(i, i) / Kg_pull(i, i);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  double c = 0.5 * (lo + hi);
  if ((hi - lo) > spread_tol * c)
    throw NonConstantRatio("killing_ratio: ratio varies across basis (" +
                           std::to_string(lo) + " .. " + std::to_string(hi) + ")");
  // Full-matrix check catches off-diagonal disagreement too.
  double res = (Kk - c * Kg_pull).cwiseAbs().maxCoeff() / scale_of(Kk);
  if (res > 1e-7)
    throw NonConstantRatio("killing_ratio: pulled-back form is not proportional");
  return c;
}

namespace {

// B-orthonormal basis of the B-orthocomplement of span(cols) inside R^dim,
// where the inner product is given by SPD matrix K with Cholesky factor L.
MatrixXd ortho_complement(const MatrixXd& cols, const MatrixXd& Lt) {
  MatrixXd U = Lt * cols;  // orthonormal-coordinate images
  Eigen::JacobiSVD<MatrixXd> svd(U, Eigen::ComputeFullU);
  int rank = 0;
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-10 * sv[0]) ++rank;
  MatrixXd comp = svd.matrixU().rightCols(U.rows() - rank);
  return Lt.triangularView<Eigen::Upper>().solve(comp);
}

// Orthonormalize columns with respect to SPD form with Cholesky-transpose Lt.
MatrixXd b_orthonormalize(const MatrixXd& cols, const MatrixXd& Lt) {
  MatrixXd U = Lt * cols;
  Eigen::HouseholderQR<MatrixXd> qr(U);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(U.rows(), U.cols());
  return Lt.triangularView<Eigen::Upper>().solve(Q);
}

}  // namespace

ReductiveSpace::ReductiveSpace(AlgebraPtr k, AlgebraPtr g1, Embedding emb1,
                               AlgebraPtr g2, Embedding emb2)
    : k_(std::move(k)),
      g1_(std::move(g1)),
      g2_(std::move(g2)),
      emb1_(std::move(emb1)),
      emb2_(std::move(emb2)) {
  if (emb1_.source.get() != k_.get() || emb2_.source.get() != k_.get())
    throw DimMismatch("build_pair_space: embeddings must share the source k");
  if (emb1_.target.get() != g1_.get() || emb2_.target.get() != g2_.get())
    throw DimMismatch("build_pair_space: embedding targets must be g1, g2");
  d1_ = g1_->dim();
  d2_ = g2_->dim();
  c1_ = killing_ratio(emb1_);
  c2_ = killing_ratio(emb2_);
  same_group_ = (g1_->family() == g2_->family() && g1_->n() == g2_->n() &&
                 emb1_.map.rows() == emb2_.map.rows() &&
                 (emb1_.map - emb2_.map).cwiseAbs().maxCoeff() < 1e-12);

  const int d = d1_ + d2_;
  B_ = MatrixXd::Zero(d, d);
  B_.topLeftCorner(d1_, d1_) = g1_->killing();
  B_.bottomRightCorner(d2_, d2_) = g2_->killing();
  Eigen::LLT<MatrixXd> llt(B_);
  Lt_ = MatrixXd(llt.matrixL()).transpose();
  const MatrixXd& Lt = Lt_;

  const int dk = k_->dim();
  MatrixXd h_raw(d, dk), m0_raw(d, dk);
  for (int i = 0; i < dk; ++i) {
    VectorXd e1 = emb1_.map.col(i), e2 = emb2_.map.col(i);
    h_raw.col(i) << e1, e2;
    m0_raw.col(i) << e1, -(c2_ / c1_) * e2;
  }
  h_basis_ = b_orthonormalize(h_raw, Lt);
  m0_basis_ = b_orthonormalize(m0_raw, Lt);

  // p_i: B_i-orthocomplement of emb_i(k) in g_i.
  MatrixXd L1t = g1_->killing_chol().transpose();
  MatrixXd L2t = g2_->killing_chol().transpose();
  p1_basis_ = ortho_complement(emb1_.map, L1t);
  p2_basis_ = same_group_ ? p1_basis_ : ortho_complement(emb2_.map, L2t);

  m1_basis_ = MatrixXd::Zero(d, p1_basis_.cols());
  m1_basis_.topRows(d1_) = p1_basis_;
  m2_basis_ = MatrixXd::Zero(d, p2_basis_.cols());
  m2_basis_.bottomRows(d2_) = p2_basis_;

  m_basis_.resize(d, m0_basis_.cols() + m1_basis_.cols() + m2_basis_.cols());
  m_basis_ << m0_basis_, m1_basis_, m2_basis_;

  if (dk + m_basis_.cols() != d)
    throw DimMismatch("build_pair_space: block dimensions do not add up");

  Bm_ = B_ * m_basis_;
  Bh_ = B_ * h_basis_;
  emb1_pinv_ = emb1_.map.completeOrthogonalDecomposition().pseudoInverse();

  if (gram_residual() > 1e-9)
    throw Error("build_pair_space: blocks are not B-orthogonal");
}

VectorXd ReductiveSpace::diag_embed(const VectorXd& z) const {
  VectorXd out(ambient_dim());
  out << emb1_.map * z, emb2_.map * z;
  return out;
}

VectorXd ReductiveSpace::bracket(const VectorXd& u, const VectorXd& v) const {
  VectorXd out(ambient_dim());
  out.head(d1_) = g1_->bracket(u.head(d1_), v.head(d1_));
  out.tail(d2_) = g2_->bracket(u.tail(d2_), v.tail(d2_));
  return out;
}

double ReductiveSpace::inner(const VectorXd& u, const VectorXd& v) const {
  return u.dot(B_ * v);
}

double ReductiveSpace::norm(const VectorXd& u) const {
  return std::sqrt(std::max(0.0, inner(u, u)));
}

VectorXd ReductiveSpace::m_coords(const VectorXd& u) const {
  return Bm_.transpose() * u;
}

VectorXd ReductiveSpace::h_coords(const VectorXd& u) const {
  return Bh_.transpose() * u;
}

VectorXd ReductiveSpace::m0_k_component(const VectorXd& u) const {
  VectorXd c = m_coords(u).head(m0_dim());
  VectorXd x0 = m0_basis_ * c;             // (emb1 K0, -(c2/c1) emb2 K0)
  return emb1_pinv_ * x0.head(d1_);
}

double ReductiveSpace::gram_residual() const {
  const int d = ambient_dim();
  MatrixXd all(d, d);
  all << h_basis_, m_basis_;
  MatrixXd gram = all.transpose() * B_ * all;
  return (gram - MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

double ReductiveSpace::ad_invariance_residual() const {
  double worst = 0.0;
  const MatrixXd blocks[3] = {m0_basis_, m1_basis_, m2_basis_};
  for (int i = 0; i < h_basis_.cols(); ++i) {
    VectorXd z = h_basis_.col(i);
    for (int b = 0; b < 3; ++b) {
      for (int j = 0; j < blocks[b].cols(); ++j) {
        VectorXd br = bracket(z, blocks[b].col(j));
        // Components outside block b (including h) must vanish.
        VectorXd within = blocks[b] * (blocks[b].transpose() * (B_ * br));
        worst = std::max(worst, norm(br - within));
      }
    }
  }
  return worst;
}

SpacePtr build_pair_space(AlgebraPtr k, AlgebraPtr g1, const Embedding& emb1,
                          AlgebraPtr g2, const Embedding& emb2) {
  return std::make_shared<ReductiveSpace>(k, g1, emb1, g2, emb2);
}

}  // namespace gohom
