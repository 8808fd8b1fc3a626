#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gohom/representation.hpp"

namespace gohom {

enum class StabilizerClass { trivial, torus, other };

struct StabilizerReport {
  std::string rep_label;
  int trials = 0;
  int dim = 0;                    // generic (principal) stabilizer dimension
  int attained = 0;               // trials that hit the generic dimension
  MatrixXd basis;                 // k-coordinates, B-orthonormal columns
  StabilizerClass cls = StabilizerClass::trivial;
  double abelian_residual = 0.0;  // max bracket norm between basis elements
};

/// Stabilizer subalgebra {Z in k : rho(Z) v = 0} at a fixed module vector.
StabilizerReport stabilizer_at(const Representation& rep, const VectorXd& v,
                               double rank_tol = 1e-10);

/// Principal isotropy: minimum stabilizer dimension over random unit module
/// vectors; the basis/structure are taken from a minimizing trial.
StabilizerReport generic_stabilizer(const Representation& rep, int trials = 20,
                                    std::uint64_t seed = 42,
                                    double rank_tol = 1e-10);

/// Two-case dichotomy for pair spaces: "case1" when some generic stabilizer
/// is trivial (dim 0), "case2" when some stabilizer is a nonzero-dimensional
/// torus (abelian), "neither" otherwise (alarm condition).
std::string classify_pair(const StabilizerReport& rep1_report,
                          const StabilizerReport& rep2_report);

std::string stabilizer_class_name(StabilizerClass c);

}  // namespace gohom
