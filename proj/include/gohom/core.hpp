#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace gohom {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Default tolerances; all residual checks are relative to operand scale.
struct Tolerances {
  double structure = 1e-10;   // Jacobi / bracket expansion / Gram checks
  double homomorphism = 1e-9; // representation and embedding residuals
  double rank = 1e-10;        // singular-value rank threshold (relative)
  double ratio_spread = 1e-8; // killing_ratio constancy
  double decision = 1e-8;     // geodesic-orbit decision
  double alarm = 1e-4;        // off-curve residual floor
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimMismatch : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct RankTooSmall : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct NonConstantRatio : Error { using Error::Error; };
struct NotSkewSymmetric : Error { using Error::Error; };
struct CoupledOnPairSpace : Error { using Error::Error; };
struct CoupledSpec : Error { using Error::Error; };
struct NotCertifiedGO : Error { using Error::Error; };
struct UnknownCase : Error { using Error::Error; };
struct RepNotConstructible : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };

/// Scale of a matrix for relative residual checks (1.0 floor avoids 0/0).
inline double scale_of(const MatrixXd& m) {
  double s = m.cwiseAbs().maxCoeff();
  return s > 1.0 ? s : 1.0;
}

}  // namespace gohom
