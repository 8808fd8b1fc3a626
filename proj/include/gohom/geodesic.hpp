#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gohom/spaces.hpp"

namespace gohom {

/// Parameters of the Ad(H)-equivariant metric endomorphism A on m.
/// Diagonal: A = x0 on m0, x on m1, y on m2.
/// Coupled (same-group spaces only): A = x0 on m0 and [[a,c],[c,b]] (x) id
/// on m1 + m2 identified through theta = identity.
struct MetricSpec {
  enum class Kind { diagonal, coupled };
  Kind kind = Kind::diagonal;
  double x0 = 1.0;
  double x = 1.0, y = 1.0;
  double a = 1.0, b = 1.0, c = 0.0;

  static MetricSpec diagonal(double x, double y, double x0 = 1.0);
  static MetricSpec coupled(double a, double b, double c, double x0 = 1.0);
  void validate() const;  // positivity / PD requirements
};

/// A on m in the B-orthonormal m-basis, plus the equivariance residual.
struct MetricOperator {
  MatrixXd A;             // m_dim x m_dim symmetric positive definite
  double equivariance_residual = 0.0;
};

MetricOperator metric_endomorphism(const ReductiveSpace& space,
                                   const MetricSpec& spec);

/// Geodesic Lemma test with the A-inner product; X_full in ambient coords.
struct GeodesicVectorResult {
  bool is_geodesic = false;
  double residual = 0.0;
};
GeodesicVectorResult geodesic_vector_test(const ReductiveSpace& space,
                                          const MetricSpec& spec,
                                          const VectorXd& X_full,
                                          double tol = 1e-8);

/// Least-squares witness Z in k minimizing |[(Z,Z)+X, AX]|_B; the residual is
/// normalized by |X| |AX| and certifies infeasibility when positive.
struct FeasibilityResult {
  VectorXd z;       // k-coordinates
  double residual;  // normalized minimum
};
FeasibilityResult go_feasibility(const ReductiveSpace& space,
                                 const MetricSpec& spec, const VectorXd& X_m);

struct GOReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double max_residual = 0.0;
  VectorXd worst_X;                  // m-coordinates
  std::vector<VectorXd> witnesses;   // Z per sample (k-coordinates)
  bool go = false;
  double ratio_residual = 0.0;       // diagonal specs; 0 for coupled
};

GOReport go_decision(const ReductiveSpace& space, const MetricSpec& spec,
                     int n_samples, std::uint64_t seed, double tol = 1e-8);

/// The four equivalent geodesic-vector conditions evaluated at (X, Z).
struct EquivalenceAudit {
  std::array<bool, 4> conditions{};
  std::array<double, 4> residuals{};
  bool consistent() const {
    return conditions[0] == conditions[1] && conditions[1] == conditions[2] &&
           conditions[2] == conditions[3];
  }
};
EquivalenceAudit equivalence_audit(const ReductiveSpace& space,
                                   const MetricSpec& spec, const VectorXd& X_m,
                                   const VectorXd& Z_k, double tol = 1e-8);

/// |(1-x)/x - c2(y-1)/(c1 y)| for diagonal specs.
double ratio_condition(const ReductiveSpace& space, const MetricSpec& spec);

struct CheckResult {
  bool ok = false;
  double residual = 0.0;
};

/// ([X,Y]_m, X) = 0 over the probe set for the fixed B-orthogonal complement.
CheckResult natural_reductivity_direct(const ReductiveSpace& space,
                                       const MetricSpec& spec,
                                       double tol = 1e-8);

/// Linear geodesic graph xi(X) = ((1-x)/x) K0; checks equivariance and the
/// geodesic equation over random probes.
CheckResult geodesic_graph_check(const ReductiveSpace& space,
                                 const MetricSpec& spec, int n_probes = 100,
                                 std::uint64_t seed = 42, double tol = 1e-9);

/// Brackets of distinct A-eigenspaces stay inside their sum (requires a GO
/// certificate; throws NotCertifiedGO otherwise).
CheckResult eigenspace_bracket_check(const ReductiveSpace& space,
                                     const MetricSpec& spec,
                                     const GOReport& certificate,
                                     double tol = 1e-9);

/// Dimension of the space of ad(h)-equivariant endomorphisms of m1 (guard for
/// the coupled family assumption).
int commutant_dimension(const ReductiveSpace& space);

struct ScanRow {
  MetricSpec spec;
  double c1, c2;
  double ratio_residual;
  double max_residual;
  bool go;
  std::uint64_t seed;
  int samples;
};

struct GridSpec {
  // Diagonal grids scan (x, y); coupled grids scan (a, b) x c_values.
  MetricSpec::Kind kind = MetricSpec::Kind::diagonal;
  double lo = 0.25, hi = 3.0, step = 0.25;  // first axis (x or a)
  // Second axis (y or b); NaN means "same as the first axis".
  double lo2 = std::numeric_limits<double>::quiet_NaN(), hi2 = 0, step2 = 0;
  std::vector<double> c_values;  // coupled only
  double x0 = 1.0;
};

std::vector<ScanRow> scan_metrics(const ReductiveSpace& space,
                                  const GridSpec& grid, int n_samples,
                                  std::uint64_t seed, double tol = 1e-8);

/// Deterministic probe set: pure-block vectors and a generic all-blocks probe.
std::vector<VectorXd> probe_set(const ReductiveSpace& space);

}  // namespace gohom
