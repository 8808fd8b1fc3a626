#include "gohom/representation.hpp"

#include <cmath>

namespace gohom {

namespace {

MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Orthonormal isometry from the symmetric (or antisymmetric) square into the
// plain tensor square.
MatrixXd pair_isometry(int n, bool symmetric) {
  const double s = 1.0 / std::sqrt(2.0);
  int cols = symmetric ? n * (n + 1) / 2 : n * (n - 1) / 2;
  MatrixXd P = MatrixXd::Zero(n * n, cols);
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : i + 1; j < n; ++j) {
      if (symmetric && i == j) {
        P(i * n + i, c) = 1.0;
      } else {
        P(i * n + j, c) = s;
        P(j * n + i, c) = symmetric ? s : -s;
      }
      ++c;
    }
  return P;
}

void check_same_algebra(const Representation& a, const Representation& b) {
  if (a.algebra.get() != b.algebra.get())
    throw AlgebraMismatch("representations act for different algebras");
}

}  // namespace

VectorXd Representation::apply(const VectorXd& z, const VectorXd& v) const {
  if (z.size() != algebra->dim() || v.size() != module_dim)
    throw DimMismatch("Representation::apply size mismatch");
  VectorXd out = VectorXd::Zero(module_dim);
  for (int i = 0; i < algebra->dim(); ++i)
    if (z[i] != 0.0) out.noalias() += z[i] * (operators[i] * v);
  return out;
}

double Representation::homomorphism_residual() const {
  const int d = algebra->dim();
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatrixXd lhs = MatrixXd::Zero(module_dim, module_dim);
      for (int k = 0; k < d; ++k) {
        double c = algebra->structure(i, j, k);
        if (c != 0.0) lhs += c * operators[k];
      }
      MatrixXd rhs = operators[i] * operators[j] - operators[j] * operators[i];
      double res = (lhs - rhs).cwiseAbs().maxCoeff() / scale_of(rhs);
      worst = std::max(worst, res);
    }
  return worst;
}

double Representation::skew_residual() const {
  double worst = 0.0;
  for (const auto& op : operators)
    worst = std::max(worst,
                     (op + op.transpose()).cwiseAbs().maxCoeff() / scale_of(op));
  return worst;
}

Representation defining_rep(AlgebraPtr alg) {
  Representation r;
  r.algebra = alg;
  r.module_dim = alg->matrix_size();
  r.operators = alg->basis_mats();
  r.label = "defining";
  return r;
}

Representation adjoint_rep(AlgebraPtr alg) {
  Representation r;
  r.algebra = alg;
  r.module_dim = alg->dim();
  const int d = alg->dim();
  MatrixXd Lt = alg->killing_chol().transpose();
  MatrixXd LtInv =
      Lt.triangularView<Eigen::Upper>().solve(MatrixXd::Identity(d, d));
  r.operators.reserve(d);
  for (const auto& ad : alg->ad_mats()) {
    // L^T ad L^{-T}: skew because B is ad-invariant.
    MatrixXd m = Lt * ad * LtInv;
    r.operators.push_back(0.5 * (m - m.transpose()));
  }
  r.label = "adjoint";
  return r;
}

Representation dual_rep(const Representation& rep) {
  Representation r;
  r.algebra = rep.algebra;
  r.module_dim = rep.module_dim;
  for (const auto& op : rep.operators) r.operators.push_back(-op.transpose());
  r.label = "dual(" + rep.label + ")";
  return r;
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  check_same_algebra(a, b);
  Representation r;
  r.algebra = a.algebra;
  r.module_dim = a.module_dim * b.module_dim;
  MatrixXd Ia = MatrixXd::Identity(a.module_dim, a.module_dim);
  MatrixXd Ib = MatrixXd::Identity(b.module_dim, b.module_dim);
  for (size_t i = 0; i < a.operators.size(); ++i)
    r.operators.push_back(kron(a.operators[i], Ib) + kron(Ia, b.operators[i]));
  r.label = "tensor(" + a.label + "," + b.label + ")";
  return r;
}

namespace {
Representation squared(const Representation& rep, bool symmetric) {
  MatrixXd P = pair_isometry(rep.module_dim, symmetric);
  Representation r;
  r.algebra = rep.algebra;
  r.module_dim = static_cast<int>(P.cols());
  MatrixXd I = MatrixXd::Identity(rep.module_dim, rep.module_dim);
  for (const auto& op : rep.operators) {
    MatrixXd t = kron(op, I) + kron(I, op);
    r.operators.push_back(P.transpose() * t * P);
  }
  r.label = (symmetric ? "sym2(" : "alt2(") + rep.label + ")";
  return r;
}
}  // namespace

Representation sym2_rep(const Representation& rep) { return squared(rep, true); }
Representation alt2_rep(const Representation& rep) { return squared(rep, false); }

Representation direct_sum(const Representation& a, const Representation& b) {
  check_same_algebra(a, b);
  Representation r;
  r.algebra = a.algebra;
  r.module_dim = a.module_dim + b.module_dim;
  for (size_t i = 0; i < a.operators.size(); ++i) {
    MatrixXd m = MatrixXd::Zero(r.module_dim, r.module_dim);
    m.topLeftCorner(a.module_dim, a.module_dim) = a.operators[i];
    m.bottomRightCorner(b.module_dim, b.module_dim) = b.operators[i];
    r.operators.push_back(m);
  }
  r.label = "oplus(" + a.label + "," + b.label + ")";
  return r;
}

Representation traceless_part(const Representation& rep) {
  // Invariant directions = common kernel of the operators.
  MatrixXd gram = MatrixXd::Zero(rep.module_dim, rep.module_dim);
  for (const auto& op : rep.operators) gram += op.transpose() * op;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  const auto& ev = es.eigenvalues();
  double thresh = 1e-10 * std::max(ev.maxCoeff(), 1.0);
  int ker = 0;
  while (ker < rep.module_dim && ev[ker] < thresh) ++ker;
  if (ker == 0)
    throw Error("traceless_part: representation has no trivial summand");
  MatrixXd Q = es.eigenvectors().rightCols(rep.module_dim - ker);
  Representation r;
  r.algebra = rep.algebra;
  r.module_dim = rep.module_dim - ker;
  for (const auto& op : rep.operators)
    r.operators.push_back(Q.transpose() * op * Q);
  r.label = "traceless(" + rep.label + ")";
  return r;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  return (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
}

// Splits "x,y" at the top-level comma.
std::pair<std::string, std::string> split_args(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw Error("rep tree: expected two arguments in '" + s + "'");
}

}  // namespace

Representation build_rep_tree(AlgebraPtr alg, const std::string& tree) {
  std::string t = strip(tree);
  if (t == "defining") return defining_rep(alg);
  if (t == "adjoint") return adjoint_rep(alg);
  auto paren = t.find('(');
  if (paren == std::string::npos || t.back() != ')')
    throw Error("rep tree: cannot parse '" + t + "'");
  std::string head = t.substr(0, paren);
  std::string inner = t.substr(paren + 1, t.size() - paren - 2);
  if (head == "sym2") return sym2_rep(build_rep_tree(alg, inner));
  if (head == "alt2") return alt2_rep(build_rep_tree(alg, inner));
  if (head == "dual") return dual_rep(build_rep_tree(alg, inner));
  if (head == "traceless") return traceless_part(build_rep_tree(alg, inner));
  if (head == "tensor" || head == "oplus") {
    auto [l, rgt] = split_args(inner);
    auto a = build_rep_tree(alg, l);
    auto b = build_rep_tree(alg, rgt);
    return head == "tensor" ? tensor_rep(a, b) : direct_sum(a, b);
  }
  throw Error("rep tree: unknown node '" + head + "'");
}

}  // namespace gohom
