// End-to-end acceptance checks. Each criterion prints exactly one
// "ACn <name>: PASS/FAIL" line; the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gohom/catalog.hpp"
#include "gohom/geodesic.hpp"
#include "gohom/isotropy.hpp"

using namespace gohom;

namespace {

int n_failed = 0;

void report(const char* id, const char* name, bool pass,
            const std::string& detail = "") {
  std::printf("%s %s: %s%s%s\n", id, name, pass ? "PASS" : "FAIL",
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!pass) ++n_failed;
}

SpacePtr b3_space() {  // (SO(4) x SU(3)) / diag SO(3)
  auto so3 = build_classical("so", 3);
  auto so4 = build_classical("so", 4);
  auto su3 = build_classical("su", 3);
  return build_pair_space(so3, so4, block_embedding(so3, so4), su3,
                          block_embedding(so3, su3));
}

SpacePtr b7_space() {  // (SU(3) x SO(5)) / diag SO(3), second factor via S^2_0
  auto so3 = build_classical("so", 3);
  auto su3 = build_classical("su", 3);
  Embedding e2 = embedding_from_rep(
      build_rep_tree(so3, "traceless(sym2(defining))"));
  return build_pair_space(so3, su3, block_embedding(so3, su3), e2.target, e2);
}

SpacePtr same_group_space() {  // (SU(3) x SU(3)) / diag SO(3)
  auto so3 = build_classical("so", 3);
  auto su3 = build_classical("su", 3);
  Embedding e = block_embedding(so3, su3);
  return build_pair_space(so3, su3, e, su3, e);
}

// y on the geodesic-orbit curve (1-x)/x = c2 (y-1)/(c1 y); caller must keep
// x in the range where y stays positive.
double curve_y(const ReductiveSpace& s, double x) {
  double r = (1.0 - x) / x * s.c1() / s.c2();
  return 1.0 / (1.0 - r);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void ac1(const ReductiveSpace& space, std::vector<MetricSpec>& go_points) {
  auto t0 = std::chrono::steady_clock::now();
  GridSpec grid;  // defaults: diagonal, 0.25..3.0 step 0.25, x0 = 1
  auto rows = scan_metrics(space, grid, 200, 42);
  bool pass = !rows.empty();
  std::string detail;
  int n_go = 0;
  for (const auto& r : rows) {
    if (r.ratio_residual < 1e-6) {
      ++n_go;
      go_points.push_back(r.spec);
      if (!(r.go && r.max_residual < 1e-8)) {
        pass = false;
        detail = "on-curve point not certified GO";
      }
    } else if (r.ratio_residual >= 0.05 && !(r.max_residual > 1e-4)) {
      pass = false;
      detail = "far off-curve point lacks an infeasibility certificate";
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    pass = false;
    detail = "runtime over 60 s";
  }
  if (detail.empty())
    detail = std::to_string(rows.size()) + " grid points, " +
             std::to_string(n_go) + " on-curve, " + std::to_string(dt) + " s";
  report("AC1", "ratio locus on (SO(4)xSU(3))/SO(3)", pass, detail);
}

void ac2(const ReductiveSpace& space, std::vector<MetricSpec>& go_points) {
  auto t0 = std::chrono::steady_clock::now();
  GridSpec grid;
  grid.kind = MetricSpec::Kind::coupled;
  grid.lo = 0.5;
  grid.hi = 2.0;
  grid.step = 0.25;
  grid.c_values = {-0.4, -0.2, 0.0, 0.2, 0.4};
  auto rows = scan_metrics(space, grid, 200, 42);
  bool pass = !rows.empty();
  std::string detail;
  int n_go = 0;
  for (const auto& r : rows) {
    bool expect_go =
        std::abs(r.spec.c) < 1e-8 &&
        std::abs((1.0 - r.spec.a) / r.spec.a -
                 (r.spec.b - 1.0) / r.spec.b) < 1e-6;
    if (expect_go) {
      ++n_go;
      go_points.push_back(r.spec);
    }
    if (r.go != expect_go) {
      pass = false;
      detail = "decision mismatch at a=" + std::to_string(r.spec.a) +
               " b=" + std::to_string(r.spec.b) +
               " c=" + std::to_string(r.spec.c);
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) {
    pass = false;
    detail = "runtime over 120 s";
  }
  if (detail.empty())
    detail = std::to_string(rows.size()) + " PD grid points, " +
             std::to_string(n_go) + " geodesic orbit, " + std::to_string(dt) +
             " s";
  report("AC2", "coupled metrics on (SU(3)xSU(3))/SO(3)", pass, detail);
}

void ac3(const std::vector<SpacePtr>& spaces) {
  bool pass = true;
  std::string detail;
  for (const auto& sp : spaces) {
    // 10 on-curve diagonal specs with both x and the induced y positive.
    for (int i = 0; i < 10 && pass; ++i) {
      double x = 1.0 + 0.2 * (i + 1);  // x > 1 keeps y in (0, 1]
      MetricSpec spec = MetricSpec::diagonal(x, curve_y(*sp, x));
      CheckResult r = geodesic_graph_check(*sp, spec, 100, 42, 1e-9);
      if (!r.ok) {
        pass = false;
        detail = "graph check failed at x=" + std::to_string(x) +
                 " residual=" + std::to_string(r.residual);
      }
    }
  }
  report("AC3", "linear geodesic graph on three spaces", pass, detail);
}

void ac4() {
  struct Row {
    const char* family;
    int n;
    const char* tree;
    int dim;
    bool abelian;
  };
  // phi1 of so(5)/so(7); adjoint of su(3); Lambda^2 phi1 of so(7);
  // defining of sp(3) (the realified 2 phi1); traceless S^2 phi1 of so(5).
  const std::vector<Row> rows = {
      {"so", 5, "defining", 6, false},
      {"so", 7, "defining", 15, false},
      {"su", 3, "adjoint", 2, true},
      {"so", 7, "alt2(defining)", 3, true},
      {"sp", 3, "defining", 10, false},
      {"so", 5, "traceless(sym2(defining))", 0, false},
  };
  bool pass = true;
  std::string detail;
  for (const auto& row : rows) {
    auto rep = build_rep_tree(build_classical(row.family, row.n), row.tree);
    StabilizerReport r = generic_stabilizer(rep, 20, 42);
    bool row_ok = r.dim == row.dim && r.attained >= 18 &&
                  (!row.abelian || (r.cls == StabilizerClass::torus &&
                                    r.abelian_residual < 1e-8));
    if (!row_ok) {
      pass = false;
      detail = std::string(row.family) + ":" + std::to_string(row.n) + " " +
               row.tree + " gave dim " + std::to_string(r.dim) + " (" +
               std::to_string(r.attained) + "/20 attained)";
    }
  }
  report("AC4", "principal isotropy dimensions", pass, detail);
}

void ac5(const std::vector<SpacePtr>& spaces) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.3, 3.0);
  bool pass = true;
  std::string detail;
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const ReductiveSpace& sp = *spaces[trial % spaces.size()];
    // Alternate between on-curve and generic diagonal specs.
    double x = unif(rng);
    double y = trial % 2 == 0 && curve_y(sp, x) > 0 ? curve_y(sp, x)
                                                    : unif(rng);
    MetricSpec spec = MetricSpec::diagonal(x, y, unif(rng));
    VectorXd X(sp.m_dim());
    for (int i = 0; i < X.size(); ++i) X[i] = gauss(rng);
    X.normalize();
    FeasibilityResult fr = go_feasibility(sp, spec, X);
    EquivalenceAudit audit = equivalence_audit(sp, spec, X, fr.z, 1e-8);
    if (!audit.consistent()) {
      pass = false;
      detail = "disagreement at trial " + std::to_string(trial);
    }
  }
  report("AC5", "four-condition equivalence on 100 samples", pass, detail);
}

void ac6(const std::vector<std::pair<SpacePtr, MetricSpec>>& certified) {
  bool pass = true;
  int n_checked = 0;
  std::string detail;
  for (const auto& [sp, spec] : certified) {
    MetricOperator op = metric_endomorphism(*sp, spec);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(op.A);
    std::set<long long> distinct;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      distinct.insert(std::llround(es.eigenvalues()[i] * 1e8));
    if (distinct.size() < 2) continue;
    ++n_checked;
    GOReport cert = go_decision(*sp, spec, 200, 42);
    if (!cert.go) {
      pass = false;
      detail = "certificate lost on re-run";
      continue;
    }
    CheckResult r = eigenspace_bracket_check(*sp, spec, cert, 1e-9);
    if (!r.ok) {
      pass = false;
      detail = "bracket residual " + std::to_string(r.residual);
    }
  }
  if (pass && detail.empty())
    detail = std::to_string(n_checked) + " multi-eigenvalue GO points";
  report("AC6", "eigenspace bracket property", pass && n_checked > 0, detail);
}

void ac7() {
  bool pass = true;
  std::string detail;
  std::vector<AlgebraPtr> algebras;
  for (int n = 2; n <= 5; ++n) algebras.push_back(build_classical("su", n));
  for (int n = 3; n <= 8; ++n) algebras.push_back(build_classical("so", n));
  for (int n = 2; n <= 4; ++n) algebras.push_back(build_classical("sp", n));
  for (const auto& alg : algebras) {
    const int d = alg->dim();
    double jacobi = 0.0;
    for (int i = 0; i < d && pass; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          VectorXd ei = VectorXd::Unit(d, i), ej = VectorXd::Unit(d, j),
                   ek = VectorXd::Unit(d, k);
          VectorXd cyc = alg->bracket(ei, alg->bracket(ej, ek)) +
                         alg->bracket(ej, alg->bracket(ek, ei)) +
                         alg->bracket(ek, alg->bracket(ei, ej));
          jacobi = std::max(jacobi, cyc.cwiseAbs().maxCoeff());
        }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(alg->killing());
    if (jacobi >= 1e-10 || es.eigenvalues().minCoeff() <= 0.0) {
      pass = false;
      detail = alg->name() + ": jacobi=" + std::to_string(jacobi);
    }
  }
  // Killing ratio must be constant (spread < 1e-8) on every implemented
  // embedding: the constructible catalog recipes.
  Catalog cat(std::string(GOHOM_DATA_DIR) + "/pair_cases.txt");
  for (const auto& e : cat.entries()) {
    if (!e.constructible) continue;
    try {
      killing_ratio(build_entry_embedding(e, 1), 1e-8);
      killing_ratio(build_entry_embedding(e, 2), 1e-8);
    } catch (const NonConstantRatio&) {
      pass = false;
      detail = e.case_id + ": non-constant Killing ratio";
    }
  }
  report("AC7", "algebra foundations and embedding constants", pass, detail);
}

void ac8() {
  bool pass = true;
  std::string detail;
  try {
    Catalog cat(std::string(GOHOM_DATA_DIR) + "/pair_cases.txt");
    if (cat.entries().size() != 83 || cat.count_with_prefix('A') != 29 ||
        cat.count_with_prefix('B') != 33 || cat.count_with_prefix('C') != 13 ||
        cat.count_with_prefix('D') != 8) {
      pass = false;
      detail = "record counts off";
    }
    int n_constructible = 0;
    for (const auto& e : cat.entries()) {
      ValidationReport r = validate_entry(e);
      if (!r.pass) {
        pass = false;
        detail = e.case_id + ": " + r.message;
      }
      if (classify_expected(e) == "neither") {
        pass = false;
        detail = e.case_id + ": dichotomy alarm";
      }
      if (e.constructible) {
        ++n_constructible;
        IsotropyCrossCheck cc = cross_check_isotropy(e, 20, 42);
        if (!cc.matches_expected || cc.alarm) {
          pass = false;
          detail = e.case_id + ": isotropy cross-check failed";
        }
      }
    }
    if (pass)
      detail = "83 records, " + std::to_string(n_constructible) +
               " constructible cross-checked";
  } catch (const std::exception& ex) {
    pass = false;
    detail = ex.what();
  }
  report("AC8", "catalog integrity", pass, detail);
}

}  // namespace

int main() {
  SpacePtr b3 = b3_space();
  SpacePtr b7 = b7_space();
  SpacePtr sg = same_group_space();
  std::vector<SpacePtr> spaces = {b3, b7, sg};

  std::vector<MetricSpec> go1, go2;
  ac1(*b3, go1);
  ac2(*sg, go2);
  ac3(spaces);
  ac4();
  ac5(spaces);
  std::vector<std::pair<SpacePtr, MetricSpec>> certified;
  for (const auto& s : go1) certified.emplace_back(b3, s);
  for (const auto& s : go2) certified.emplace_back(sg, s);
  ac6(certified);
  ac7();
  ac8();

  std::printf("%s\n", n_failed == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return n_failed;
}
