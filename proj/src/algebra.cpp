#include "gohom/algebra.hpp"

#include <cmath>
#include <complex>
#include <utility>

namespace gohom {

namespace {

using CMat = Eigen::MatrixXcd;

MatrixXd realify(const CMat& m) {
  const auto k = m.rows();
  MatrixXd r(2 * k, 2 * k);
  r.topLeftCorner(k, k) = m.real();
  r.topRightCorner(k, k) = -m.imag();
  r.bottomLeftCorner(k, k) = m.imag();
  r.bottomRightCorner(k, k) = m.real();
  return r;
}

std::vector<MatrixXd> so_basis(int n) {
  std::vector<MatrixXd> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatrixXd m = MatrixXd::Zero(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      b.push_back(m);
    }
  return b;
}

std::vector<CMat> su_complex_basis(int n) {
  const std::complex<double> I(0.0, 1.0);
  std::vector<CMat> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat m = CMat::Zero(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      b.push_back(m);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat m = CMat::Zero(n, n);
      m(i, j) = I;
      m(j, i) = I;
      b.push_back(m);
    }
  for (int k = 0; k + 1 < n; ++k) {
    CMat m = CMat::Zero(n, n);
    m(k, k) = I;
    m(k + 1, k + 1) = -I;
    b.push_back(m);
  }
  return b;
}

// sp(n) inside su(2n): [[A, B], [-conj B, conj A]], A skew-hermitian,
// B complex symmetric.
std::vector<CMat> sp_complex_basis(int n) {
  const std::complex<double> I(0.0, 1.0);
  std::vector<CMat> b;
  auto push = [&](const CMat& A, const CMat& B) {
    CMat m = CMat::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = A;
    m.topRightCorner(n, n) = B;
    m.bottomLeftCorner(n, n) = -B.conjugate();
    m.bottomRightCorner(n, n) = A.conjugate();
    b.push_back(m);
  };
  const CMat Z = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat A = Z;
      A(i, j) = 1.0;
      A(j, i) = -1.0;
      push(A, Z);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat A = Z;
      A(i, j) = I;
      A(j, i) = I;
      push(A, Z);
    }
  for (int k = 0; k < n; ++k) {
    CMat A = Z;
    A(k, k) = I;
    push(A, Z);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      CMat B = Z;
      B(i, j) = 1.0;
      B(j, i) = 1.0;
      push(Z, B);
      CMat Bi = Z;
      Bi(i, j) = I;
      Bi(j, i) = I;
      push(Z, Bi);
    }
  return b;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::su: return "su";
    case Family::so: return "so";
    case Family::sp: return "sp";
  }
  return "?";
}

LieAlgebra::LieAlgebra(Family family, int n, std::string name,
                       std::vector<MatrixXd> basis_mats)
    : family_(family),
      n_(n),
      name_(std::move(name)),
      dim_(static_cast<int>(basis_mats.size())),
      basis_mats_(std::move(basis_mats)) {
  const int N = matrix_size();
  flat_basis_.resize(N * N, dim_);
  for (int i = 0; i < dim_; ++i)
    flat_basis_.col(i) = Eigen::Map<const VectorXd>(basis_mats_[i].data(), N * N);
  flat_solver_.compute(flat_basis_);
  if (flat_solver_.rank() < dim_)
    throw RankDeficient(name_ + ": basis matrices are linearly dependent");

  // Structure tensor from the realization.
  ad_.assign(dim_, MatrixXd::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      MatrixXd com = basis_mats_[i] * basis_mats_[j] - basis_mats_[j] * basis_mats_[i];
      VectorXd c = flat_solver_.solve(Eigen::Map<const VectorXd>(com.data(), N * N));
      double res = (flat_basis_ * c - Eigen::Map<const VectorXd>(com.data(), N * N))
                       .cwiseAbs()
                       .maxCoeff();
      if (res > 1e-8 * scale_of(com))
        throw Error(name_ + ": commutator not in basis span");
      ad_[i].col(j) = c;
      ad_[j].col(i) = -c;
    }

  // Minus Killing form, -tr(ad ad), never a trace-form shortcut.
  MatrixXd flat_ad(dim_ * dim_, dim_), flat_adT(dim_ * dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    flat_ad.col(i) = Eigen::Map<const VectorXd>(ad_[i].data(), dim_ * dim_);
    MatrixXd t = ad_[i].transpose();
    flat_adT.col(i) = Eigen::Map<const VectorXd>(t.data(), dim_ * dim_);
  }
  killing_ = -(flat_adT.transpose() * flat_ad);
  killing_ = 0.5 * (killing_ + killing_.transpose());

  Eigen::LLT<MatrixXd> llt(killing_);
  if (llt.info() != Eigen::Success)
    throw Error(name_ + ": minus Killing form is not positive definite");
  killing_chol_ = llt.matrixL();
}

VectorXd LieAlgebra::bracket(const VectorXd& x, const VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimMismatch(name_ + ": bracket coordinate length mismatch");
  VectorXd out = VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) out.noalias() += x[i] * (ad_[i] * y);
  return out;
}

double LieAlgebra::minus_killing(const VectorXd& x, const VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimMismatch(name_ + ": Killing coordinate length mismatch");
  return x.dot(killing_ * y);
}

VectorXd LieAlgebra::coordinates(const MatrixXd& m, double tol) const {
  const int N = matrix_size();
  if (m.rows() != N || m.cols() != N)
    throw DimMismatch(name_ + ": realization size mismatch");
  VectorXd flat = Eigen::Map<const VectorXd>(m.data(), N * N);
  VectorXd c = flat_solver_.solve(flat);
  if ((flat_basis_ * c - flat).cwiseAbs().maxCoeff() > tol * scale_of(m))
    throw Error(name_ + ": matrix not in algebra span");
  return c;
}

MatrixXd LieAlgebra::realize(const VectorXd& x) const {
  const int N = matrix_size();
  MatrixXd m = MatrixXd::Zero(N, N);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) m += x[i] * basis_mats_[i];
  return m;
}

AlgebraPtr build_classical(Family family, int n) {
  std::vector<MatrixXd> mats;
  switch (family) {
    case Family::so:
      if (n < 3) throw RankTooSmall("so(n) requires n >= 3");
      mats = so_basis(n);
      break;
    case Family::su: {
      if (n < 2) throw RankTooSmall("su(n) requires n >= 2");
      for (const auto& c : su_complex_basis(n)) mats.push_back(realify(c));
      break;
    }
    case Family::sp: {
      if (n < 2) throw RankTooSmall("sp(n) requires n >= 2");
      for (const auto& c : sp_complex_basis(n)) mats.push_back(realify(c));
      break;
    }
  }
  std::string name = family_name(family) + "(" + std::to_string(n) + ")";
  return std::make_shared<LieAlgebra>(family, n, std::move(name), std::move(mats));
}

AlgebraPtr build_classical(const std::string& family, int n) {
  if (family == "su") return build_classical(Family::su, n);
  if (family == "so") return build_classical(Family::so, n);
  if (family == "sp") return build_classical(Family::sp, n);
  throw UnsupportedFamily("unsupported family: " + family);
}

std::vector<VectorXd> orthonormalize(const LieAlgebra& alg,
                                     const std::vector<VectorXd>& vecs,
                                     double rank_tol) {
  if (vecs.empty()) return {};
  const int d = alg.dim();
  MatrixXd V(d, static_cast<int>(vecs.size()));
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != d) throw DimMismatch("orthonormalize: bad coord length");
    V.col(static_cast<int>(i)) = vecs[i];
  }
  // Work in B-orthonormal coordinates u = L^T v.
  MatrixXd U = alg.killing_chol().transpose() * V;
  Eigen::JacobiSVD<MatrixXd> svd(U, Eigen::ComputeThinU);
  if (svd.singularValues().minCoeff() <
      rank_tol * svd.singularValues().maxCoeff() * 1e0 ||
      svd.rank() < U.cols())
    throw RankDeficient("orthonormalize: input vectors are linearly dependent");
  // Gram-Schmidt (thin QR) keeps the leading vectors' orientation.
  Eigen::HouseholderQR<MatrixXd> qr(U);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(d, U.cols());
  MatrixXd W = alg.killing_chol().transpose().triangularView<Eigen::Upper>().solve(Q);
  std::vector<VectorXd> out;
  out.reserve(vecs.size());
  for (int i = 0; i < W.cols(); ++i) out.push_back(W.col(i));
  return out;
}

}  // namespace gohom
