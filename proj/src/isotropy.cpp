#include "gohom/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gohom {

namespace {

// B-orthonormalize kernel columns (k-coordinates) against the Killing form.
MatrixXd b_orthonormal_kernel(const LieAlgebra& alg, const MatrixXd& cols) {
  if (cols.cols() == 0) return cols;
  MatrixXd Lt = alg.killing_chol().transpose();
  MatrixXd U = Lt * cols;
  Eigen::HouseholderQR<MatrixXd> qr(U);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(U.rows(), U.cols());
  return Lt.triangularView<Eigen::Upper>().solve(Q);
}

void classify_structure(const Representation& rep, StabilizerReport& r) {
  const auto& alg = *rep.algebra;
  if (r.dim == 0) {
    r.cls = StabilizerClass::trivial;
    r.abelian_residual = 0.0;
    return;
  }
  double worst = 0.0;
  for (int i = 0; i < r.dim; ++i)
    for (int j = i + 1; j < r.dim; ++j)
      worst = std::max(
          worst, alg.bracket(r.basis.col(i), r.basis.col(j)).norm());
  r.abelian_residual = worst;
  r.cls = worst < 1e-8 ? StabilizerClass::torus : StabilizerClass::other;
}

}  // namespace

StabilizerReport stabilizer_at(const Representation& rep, const VectorXd& v,
                               double rank_tol) {
  if (v.norm() == 0.0) throw Error("stabilizer_at: v must be nonzero");
  const int dk = rep.algebra->dim();
  MatrixXd M(rep.module_dim, dk);
  for (int i = 0; i < dk; ++i) M.col(i) = rep.operators[i] * v;
  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > rank_tol * std::max(top, 1.0)) ++rank;

  StabilizerReport r;
  r.rep_label = rep.label;
  r.trials = 1;
  r.dim = dk - rank;
  r.attained = 1;
  r.basis = b_orthonormal_kernel(*rep.algebra, svd.matrixV().rightCols(r.dim));
  classify_structure(rep, r);
  return r;
}

StabilizerReport generic_stabilizer(const Representation& rep, int trials,
                                    std::uint64_t seed, double rank_tol) {
  if (trials < 3) throw Error("generic_stabilizer: trials must be >= 3");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  StabilizerReport best;
  std::vector<int> dims;
  dims.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    VectorXd v(rep.module_dim);
    for (int i = 0; i < v.size(); ++i) v[i] = gauss(rng);
    v.normalize();
    StabilizerReport r = stabilizer_at(rep, v, rank_tol);
    dims.push_back(r.dim);
    if (t == 0 || r.dim < best.dim) best = r;
  }
  best.trials = trials;
  best.attained =
      static_cast<int>(std::count(dims.begin(), dims.end(), best.dim));
  return best;
}

std::string classify_pair(const StabilizerReport& r1,
                          const StabilizerReport& r2) {
  if (r1.dim == 0 || r2.dim == 0) return "case1";
  if (r1.cls == StabilizerClass::torus || r2.cls == StabilizerClass::torus)
    return "case2";
  return "neither";
}

std::string stabilizer_class_name(StabilizerClass c) {
  switch (c) {
    case StabilizerClass::trivial: return "trivial";
    case StabilizerClass::torus: return "abelian";
    case StabilizerClass::other: return "nonabelian";
  }
  return "?";
}

}  // namespace gohom
