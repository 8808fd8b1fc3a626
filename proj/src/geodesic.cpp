#include "gohom/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gohom {

namespace {

constexpr double kNormFloor = 1e-300;

// ad(Z)|m in m-basis coordinates for an ambient Z (columns act on m-coords).
MatrixXd ad_on_m(const ReductiveSpace& space, const VectorXd& z_ambient) {
  const int m = space.m_dim();
  MatrixXd out(m, m);
  for (int j = 0; j < m; ++j)
    out.col(j) = space.m_coords(space.bracket(z_ambient, space.m_basis().col(j)));
  return out;
}

// k-coordinates of the h-basis column (h columns are (emb1 z, emb2 z) scaled).
VectorXd h_col_to_k(const ReductiveSpace& space, int i) {
  VectorXd col = space.h_basis().col(i);
  const int d1 = space.g1()->dim();
  return space.emb1().map.colPivHouseholderQr().solve(col.head(d1));
}

FeasibilityResult feasibility_with(const ReductiveSpace& space,
                                   const MatrixXd& A, const VectorXd& X_m) {
  const int dk = space.k()->dim();
  const MatrixXd& Lt = space.ambient_chol_t();
  VectorXd X_amb = space.from_m_coords(X_m);
  VectorXd AX_m = A * X_m;
  VectorXd AX_amb = space.from_m_coords(AX_m);

  MatrixXd C(space.ambient_dim(), dk);
  for (int i = 0; i < dk; ++i) {
    VectorXd z_amb = space.diag_embed(VectorXd::Unit(dk, i));
    C.col(i) = Lt * space.bracket(z_amb, AX_amb);
  }
  VectorXd r = Lt * space.bracket(X_amb, AX_amb);

  FeasibilityResult res;
  res.z = C.colPivHouseholderQr().solve(-r);
  double raw = (C * res.z + r).norm();
  double scale = std::max(X_m.norm() * AX_m.norm(), kNormFloor);
  res.residual = raw / scale;
  return res;
}

}  // namespace

MetricSpec MetricSpec::diagonal(double x, double y, double x0) {
  MetricSpec s;
  s.kind = Kind::diagonal;
  s.x = x;
  s.y = y;
  s.x0 = x0;
  s.validate();
  return s;
}

MetricSpec MetricSpec::coupled(double a, double b, double c, double x0) {
  MetricSpec s;
  s.kind = Kind::coupled;
  s.a = a;
  s.b = b;
  s.c = c;
  s.x0 = x0;
  s.validate();
  return s;
}

void MetricSpec::validate() const {
  if (x0 <= 0.0) throw Error("MetricSpec: x0 must be positive");
  if (kind == Kind::diagonal) {
    if (x <= 0.0 || y <= 0.0) throw Error("MetricSpec: x, y must be positive");
  } else {
    if (a <= 0.0 || b <= 0.0 || a * b - c * c <= 0.0)
      throw Error("MetricSpec: coupled block [[a,c],[c,b]] must be positive definite");
  }
}

MetricOperator metric_endomorphism(const ReductiveSpace& space,
                                   const MetricSpec& spec) {
  spec.validate();
  const int m0 = space.m0_dim(), m1 = space.m1_dim(), m2 = space.m2_dim();
  MetricOperator op;
  op.A = MatrixXd::Zero(space.m_dim(), space.m_dim());
  op.A.topLeftCorner(m0, m0) = spec.x0 * MatrixXd::Identity(m0, m0);
  if (spec.kind == MetricSpec::Kind::diagonal) {
    op.A.block(m0, m0, m1, m1) = spec.x * MatrixXd::Identity(m1, m1);
    op.A.block(m0 + m1, m0 + m1, m2, m2) = spec.y * MatrixXd::Identity(m2, m2);
  } else {
    if (!space.same_group())
      throw CoupledOnPairSpace(
          "metric_endomorphism: coupled specs need g1 = g2 with equal "
          "embeddings (m1 and m2 are inequivalent modules otherwise)");
    op.A.block(m0, m0, m1, m1) = spec.a * MatrixXd::Identity(m1, m1);
    op.A.block(m0 + m1, m0 + m1, m2, m2) = spec.b * MatrixXd::Identity(m2, m2);
    // theta = identity: m1 and m2 carry the same basis of p.
    op.A.block(m0, m0 + m1, m1, m2) = spec.c * MatrixXd::Identity(m1, m2);
    op.A.block(m0 + m1, m0, m2, m1) = spec.c * MatrixXd::Identity(m2, m1);
  }

  double worst = 0.0;
  for (int i = 0; i < space.h_basis().cols(); ++i) {
    MatrixXd M = ad_on_m(space, space.h_basis().col(i));
    worst = std::max(worst, (M * op.A - op.A * M).cwiseAbs().maxCoeff() /
                                scale_of(op.A));
  }
  op.equivariance_residual = worst;
  if (worst > 1e-9)
    throw Error("metric_endomorphism: A is not ad(h)-equivariant");
  return op;
}

GeodesicVectorResult geodesic_vector_test(const ReductiveSpace& space,
                                          const MetricSpec& spec,
                                          const VectorXd& X_full, double tol) {
  MetricOperator op = metric_endomorphism(space, spec);
  VectorXd Wm = space.m_coords(X_full);
  VectorXd AWm = op.A * Wm;
  double worst = 0.0;
  for (int j = 0; j < space.m_dim(); ++j) {
    VectorXd br = space.m_coords(space.bracket(X_full, space.m_basis().col(j)));
    worst = std::max(worst, std::abs(AWm.dot(br)));
  }
  GeodesicVectorResult res;
  res.residual =
      worst / std::max(space.norm(X_full) * AWm.norm(), kNormFloor);
  res.is_geodesic = res.residual < tol;
  return res;
}

FeasibilityResult go_feasibility(const ReductiveSpace& space,
                                 const MetricSpec& spec, const VectorXd& X_m) {
  MetricOperator op = metric_endomorphism(space, spec);
  return feasibility_with(space, op.A, X_m);
}

std::vector<VectorXd> probe_set(const ReductiveSpace& space) {
  const int m0 = space.m0_dim(), m1 = space.m1_dim(), m2 = space.m2_dim();
  const int m = space.m_dim();
  std::vector<VectorXd> probes;
  auto push = [&](const VectorXd& v) {
    double n = v.norm();
    if (n > 0) probes.push_back(v / n);
  };
  const int offs[3] = {0, m0, m0 + m1};
  const int lens[3] = {m0, m1, m2};
  for (int b = 0; b < 3; ++b) {
    if (lens[b] == 0) continue;
    VectorXd v = VectorXd::Zero(m);
    v.segment(offs[b], lens[b]).setOnes();
    push(v);
  }
  // Generic probes with every block component nonzero (the binding case for
  // the necessity direction of the GO criterion).
  VectorXd g1 = VectorXd::Ones(m);
  push(g1);
  VectorXd g2(m);
  for (int i = 0; i < m; ++i) g2[i] = 1.0 + 0.37 * i;
  push(g2);
  return probes;
}

double ratio_condition(const ReductiveSpace& space, const MetricSpec& spec) {
  if (spec.kind != MetricSpec::Kind::diagonal)
    throw CoupledSpec("ratio_condition: diagonal specs only");
  return std::abs((1.0 - spec.x) / spec.x -
                  space.c2() * (spec.y - 1.0) / (space.c1() * spec.y));
}

GOReport go_decision(const ReductiveSpace& space, const MetricSpec& spec,
                     int n_samples, std::uint64_t seed, double tol) {
  if (n_samples < 1) throw Error("go_decision: n_samples must be >= 1");
  MetricOperator op = metric_endomorphism(space, spec);

  GOReport rep;
  rep.samples = n_samples;
  rep.seed = seed;
  rep.tol = tol;

  std::vector<VectorXd> xs = probe_set(space);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < n_samples; ++s) {
    VectorXd v(space.m_dim());
    for (int i = 0; i < v.size(); ++i) v[i] = gauss(rng);
    double n = v.norm();
    if (n < 1e-12) { --s; continue; }
    xs.push_back(v / n);
  }

  rep.max_residual = 0.0;
  for (const auto& x : xs) {
    FeasibilityResult fr = feasibility_with(space, op.A, x);
    rep.witnesses.push_back(fr.z);
    if (fr.residual >= rep.max_residual) {
      rep.max_residual = fr.residual;
      rep.worst_X = x;
    }
  }
  rep.go = rep.max_residual <= tol;
  if (spec.kind == MetricSpec::Kind::diagonal) {
    rep.ratio_residual = ratio_condition(space, spec);
  } else {
    double diag = std::abs((1.0 - spec.a) / spec.a -
                           space.c2() * (spec.b - 1.0) / (space.c1() * spec.b));
    rep.ratio_residual = std::max(std::abs(spec.c), diag);
  }
  return rep;
}

EquivalenceAudit equivalence_audit(const ReductiveSpace& space,
                                   const MetricSpec& spec, const VectorXd& X_m,
                                   const VectorXd& Z_k, double tol) {
  MetricOperator op = metric_endomorphism(space, spec);
  VectorXd X_amb = space.from_m_coords(X_m);
  VectorXd Z_amb = space.diag_embed(Z_k);
  VectorXd W = Z_amb + X_amb;
  VectorXd AX_m = op.A * X_m;
  VectorXd AX_amb = space.from_m_coords(AX_m);
  double scale = std::max((space.norm(Z_amb) + X_m.norm()) * AX_m.norm(),
                          kNormFloor);

  EquivalenceAudit audit;
  // (1) Z+X is a geodesic vector (geodesic lemma with the A-metric).
  audit.residuals[0] =
      geodesic_vector_test(space, spec, W, tol).residual *
      std::max(space.norm(W) * AX_m.norm(), kNormFloor) / scale;

  // (2) [Z+X, AX] lies in k: the m-component vanishes.
  audit.residuals[1] = space.m_coords(space.bracket(W, AX_amb)).norm() / scale;

  // (3) ([Z,X], Y) = (X, [X,Y]_m) for every basis Y of m.
  VectorXd zx = space.m_coords(space.bracket(Z_amb, X_amb));
  VectorXd lhs = op.A * zx;  // pair against Y through ( , ) = B(A., .)
  double worst3 = 0.0;
  for (int j = 0; j < space.m_dim(); ++j) {
    VectorXd xy = space.m_coords(space.bracket(X_amb, space.m_basis().col(j)));
    worst3 = std::max(worst3, std::abs(lhs[j] - AX_m.dot(xy)));
  }
  audit.residuals[2] = worst3 / scale;

  // (4) ([Z+X, Y]_m, X) = 0 for every basis Y of m.
  double worst4 = 0.0;
  for (int j = 0; j < space.m_dim(); ++j) {
    VectorXd wy = space.m_coords(space.bracket(W, space.m_basis().col(j)));
    worst4 = std::max(worst4, std::abs(AX_m.dot(wy)));
  }
  audit.residuals[3] = worst4 / scale;

  for (int i = 0; i < 4; ++i) audit.conditions[i] = audit.residuals[i] < tol;
  return audit;
}

CheckResult natural_reductivity_direct(const ReductiveSpace& space,
                                       const MetricSpec& spec, double tol) {
  MetricOperator op = metric_endomorphism(space, spec);
  double worst = 0.0;
  for (const auto& x : probe_set(space)) {
    VectorXd X_amb = space.from_m_coords(x);
    VectorXd AX = op.A * x;
    double scale = std::max(AX.norm(), kNormFloor);
    for (int j = 0; j < space.m_dim(); ++j) {
      VectorXd br = space.m_coords(space.bracket(X_amb, space.m_basis().col(j)));
      worst = std::max(worst, std::abs(AX.dot(br)) / scale);
    }
  }
  return CheckResult{worst < tol, worst};
}

CheckResult geodesic_graph_check(const ReductiveSpace& space,
                                 const MetricSpec& spec, int n_probes,
                                 std::uint64_t seed, double tol) {
  if (spec.kind != MetricSpec::Kind::diagonal)
    throw CoupledSpec("geodesic_graph_check: diagonal specs only");
  MetricOperator op = metric_endomorphism(space, spec);
  const double coeff = (1.0 - spec.x) / spec.x;
  const int dk = space.k()->dim();
  const int m = space.m_dim();

  // xi as a matrix m -> k; only the m0 block contributes.
  MatrixXd Xi = MatrixXd::Zero(dk, m);
  for (int j = 0; j < m; ++j)
    Xi.col(j) = coeff * space.m0_k_component(space.m_basis().col(j));

  // Equivariance: xi(ad Z . X) = ad_k(z) xi(X) for Z in h.
  double worst = 0.0;
  for (int i = 0; i < space.h_basis().cols(); ++i) {
    MatrixXd M = ad_on_m(space, space.h_basis().col(i));
    VectorXd zk = h_col_to_k(space, i);
    MatrixXd adk(dk, dk);
    for (int j = 0; j < dk; ++j)
      adk.col(j) = space.k()->bracket(zk, VectorXd::Unit(dk, j));
    worst = std::max(worst,
                     (Xi * M - adk * Xi).cwiseAbs().maxCoeff() /
                         std::max(1.0, std::abs(coeff)));
  }

  // Geodesic equation at xi(X) over probe and random X.
  std::vector<VectorXd> xs = probe_set(space);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < n_probes; ++s) {
    VectorXd v(m);
    for (int i = 0; i < v.size(); ++i) v[i] = gauss(rng);
    xs.push_back(v.normalized());
  }
  for (const auto& x : xs) {
    VectorXd X_amb = space.from_m_coords(x);
    VectorXd AX_m = op.A * x;
    VectorXd AX_amb = space.from_m_coords(AX_m);
    VectorXd Z_amb = space.diag_embed(Xi * x);
    double r = space.norm(space.bracket(Z_amb + X_amb, AX_amb)) /
               std::max(x.norm() * AX_m.norm(), kNormFloor);
    worst = std::max(worst, r);
  }
  return CheckResult{worst < tol, worst};
}

CheckResult eigenspace_bracket_check(const ReductiveSpace& space,
                                     const MetricSpec& spec,
                                     const GOReport& certificate, double tol) {
  if (!certificate.go)
    throw NotCertifiedGO(
        "eigenspace_bracket_check: the bracket property is asserted for "
        "geodesic orbit metrics only");
  MetricOperator op = metric_endomorphism(space, spec);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(op.A);
  const VectorXd& ev = es.eigenvalues();
  const MatrixXd& Q = es.eigenvectors();

  // Group eigenvalues into eigenspaces.
  std::vector<std::pair<int, int>> groups;  // [start, end)
  double grp_tol = 1e-8 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int start = 0;
  for (int i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev[i] - ev[start] > grp_tol) {
      groups.emplace_back(start, i);
      start = i;
    }
  }

  double worst = 0.0;
  for (size_t gi = 0; gi < groups.size(); ++gi)
    for (size_t gj = gi + 1; gj < groups.size(); ++gj) {
      auto [ai, bi] = groups[gi];
      auto [aj, bj] = groups[gj];
      MatrixXd Ui = Q.middleCols(ai, bi - ai);
      MatrixXd Uj = Q.middleCols(aj, bj - aj);
      for (int u = ai; u < bi; ++u)
        for (int v = aj; v < bj; ++v) {
          VectorXd br = space.m_coords(
              space.bracket(space.from_m_coords(Q.col(u)),
                            space.from_m_coords(Q.col(v))));
          VectorXd out = br - Ui * (Ui.transpose() * br) -
                         Uj * (Uj.transpose() * br);
          worst = std::max(worst, out.norm() / std::max(1.0, br.norm()));
        }
    }
  return CheckResult{worst < tol, worst};
}

int commutant_dimension(const ReductiveSpace& space) {
  const int n = space.m1_dim();
  if (n == 0) return 0;
  const int m0 = space.m0_dim();
  const int nh = static_cast<int>(space.h_basis().cols());
  MatrixXd sys = MatrixXd::Zero(nh * n * n, n * n);
  for (int h = 0; h < nh; ++h) {
    MatrixXd R(n, n);
    for (int j = 0; j < n; ++j) {
      VectorXd mc = space.m_coords(
          space.bracket(space.h_basis().col(h), space.m1_basis().col(j)));
      R.col(j) = mc.segment(m0, n);
    }
    // vec(T R - R T) = (R^T kron I - I kron R) vec(T), column-major vec.
    MatrixXd block = MatrixXd::Zero(n * n, n * n);
    for (int bc = 0; bc < n; ++bc)
      for (int br = 0; br < n; ++br) {
        block.block(br * n, bc * n, n, n) +=
            R(bc, br) * MatrixXd::Identity(n, n);
        if (br == bc) block.block(br * n, bc * n, n, n) -= R;
      }
    sys.middleRows(h * n * n, n * n) = block;
  }
  Eigen::JacobiSVD<MatrixXd> svd(sys);
  const auto& sv = svd.singularValues();
  double thresh = 1e-8 * std::max(1.0, sv.size() ? sv[0] : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > thresh) ++rank;
  return n * n - rank;
}

std::vector<ScanRow> scan_metrics(const ReductiveSpace& space,
                                  const GridSpec& grid, int n_samples,
                                  std::uint64_t seed, double tol) {
  std::vector<MetricSpec> specs;
  auto range = [](double lo, double hi, double step) {
    std::vector<double> v;
    for (double t = lo; t <= hi + 1e-12; t += step) v.push_back(t);
    return v;
  };
  std::vector<double> first = range(grid.lo, grid.hi, grid.step);
  std::vector<double> second = std::isnan(grid.lo2)
                                   ? first
                                   : range(grid.lo2, grid.hi2, grid.step2);
  if (grid.kind == MetricSpec::Kind::diagonal) {
    for (double x : first)
      for (double y : second) specs.push_back(MetricSpec::diagonal(x, y, grid.x0));
  } else {
    std::vector<double> cs = grid.c_values.empty()
                                 ? std::vector<double>{0.0}
                                 : grid.c_values;
    for (double a : first)
      for (double b : second)
        for (double c : cs) {
          if (a * b - c * c <= 0.0) continue;  // keep PD points only
          specs.push_back(MetricSpec::coupled(a, b, c, grid.x0));
        }
  }

  std::vector<ScanRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) {
    GOReport rep = go_decision(space, spec, n_samples, seed, tol);
    rows.push_back(ScanRow{spec, space.c1(), space.c2(), rep.ratio_residual,
                           rep.max_residual, rep.go, seed, n_samples});
  }
  return rows;
}

}  // namespace gohom
