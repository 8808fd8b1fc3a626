#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gohom/core.hpp"

namespace gohom {

enum class Family { su, so, sp };

std::string family_name(Family f);

/// Compact classical Lie algebra given by a faithful real matrix realization,
/// its structure tensor and the minus Killing form (positive definite).
///
/// Basis ordering is fixed per family:
///   so(n): E_ij - E_ji for i<j in lexicographic order.
///   su(n): realified; first the n(n-1)/2 real skew pairs E_ij - E_ji (i<j lex),
///          then i(E_ij + E_ji) (i<j lex), then i(E_kk - E_{k+1,k+1}).
///   sp(n): realization inside su(2n) as [[A,B],[-conj B, conj A]], A skew-
///          hermitian, B symmetric; A real-skew part, A imaginary part
///          (off-diag then diag), then B real, B imaginary; realified to 4n x 4n.
class LieAlgebra {
 public:
  LieAlgebra(Family family, int n, std::string name,
             std::vector<MatrixXd> basis_mats);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int matrix_size() const { return static_cast<int>(basis_mats_[0].rows()); }

  const std::vector<MatrixXd>& basis_mats() const { return basis_mats_; }
  /// ad-matrix of the i-th basis element acting on coordinates:
  /// ad(i)(k,j) = C_ij^k.
  const std::vector<MatrixXd>& ad_mats() const { return ad_; }
  double structure(int i, int j, int k) const { return ad_[i](k, j); }

  const MatrixXd& killing() const { return killing_; }
  /// Lower Cholesky factor L with killing = L L^T (B-orthonormal coords u = L^T v).
  const MatrixXd& killing_chol() const { return killing_chol_; }

  VectorXd bracket(const VectorXd& x, const VectorXd& y) const;
  double minus_killing(const VectorXd& x, const VectorXd& y) const;

  /// Coordinates of a realization-space matrix in this basis; throws if the
  /// matrix is not in the span (relative residual above tol).
  VectorXd coordinates(const MatrixXd& m, double tol = 1e-8) const;
  MatrixXd realize(const VectorXd& x) const;

 private:
  Family family_;
  int n_;
  std::string name_;
  int dim_;
  std::vector<MatrixXd> basis_mats_;
  std::vector<MatrixXd> ad_;
  MatrixXd killing_;
  MatrixXd killing_chol_;
  Eigen::ColPivHouseholderQR<MatrixXd> flat_solver_;
  MatrixXd flat_basis_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// su/so/sp construction; su and sp are realified so every basis matrix is a
/// real skew-symmetric matrix. n >= 2 for su, sp; n >= 3 for so.
AlgebraPtr build_classical(Family family, int n);
AlgebraPtr build_classical(const std::string& family, int n);

/// B-orthonormalization (Gram-Schmidt in Killing-Cholesky coordinates).
/// Throws RankDeficient if the input is not linearly independent.
std::vector<VectorXd> orthonormalize(const LieAlgebra& alg,
                                     const std::vector<VectorXd>& vecs,
                                     double rank_tol = 1e-10);

}  // namespace gohom
