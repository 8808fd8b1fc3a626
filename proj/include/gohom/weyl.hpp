#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gohom/core.hpp"

namespace gohom {

enum class RootFamily { A, B, C, D };

RootFamily root_family_from_char(char c);
/// Root system of the compact classical algebra (su -> A, so odd -> B,
/// sp -> C, so even -> D) together with its rank.
std::pair<RootFamily, int> root_system_of(const std::string& family, int n);

/// Non-negative coefficients of fundamental weights.
struct WeightVector {
  std::vector<int> coeffs;
};

/// Weyl dimension formula, prod over positive roots of <l+d,a>/<d,a>,
/// evaluated in exact integer arithmetic (coordinates scaled by 2 so that
/// spin weights stay integral). Throws NonIntegerResult if the product is
/// not an integer.
std::int64_t weyl_dimension(RootFamily family, int rank, const WeightVector& w);

}  // namespace gohom
