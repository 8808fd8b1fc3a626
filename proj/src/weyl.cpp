#include "gohom/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

namespace gohom {

namespace {

using boost::multiprecision::cpp_int;

std::vector<std::vector<int>> positive_roots(RootFamily f, int r) {
  std::vector<std::vector<int>> roots;
  const int dim = (f == RootFamily::A) ? r + 1 : r;
  auto unit = [&](int i, int s) {
    std::vector<int> v(dim, 0);
    v[i] = s;
    return v;
  };
  auto pair_root = [&](int i, int j, int sj) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    v[j] = sj;
    return v;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      roots.push_back(pair_root(i, j, -1));
      if (f != RootFamily::A) roots.push_back(pair_root(i, j, 1));
    }
  if (f == RootFamily::B)
    for (int i = 0; i < r; ++i) roots.push_back(unit(i, 1));
  if (f == RootFamily::C)
    for (int i = 0; i < r; ++i) roots.push_back(unit(i, 2));
  return roots;
}

// Fundamental weights in standard coordinates, scaled by 2(r+1) for A and
// by 2 otherwise so everything is integral.
std::vector<std::vector<long long>> fundamental_weights_scaled(RootFamily f, int r,
                                                               long long& scale) {
  std::vector<std::vector<long long>> w;
  if (f == RootFamily::A) {
    scale = 2LL * (r + 1);
    for (int k = 1; k <= r; ++k) {
      std::vector<long long> v(r + 1);
      for (int i = 0; i <= r; ++i)
        v[i] = (i < k) ? scale - 2LL * k : -2LL * k;
      w.push_back(v);
    }
    return w;
  }
  scale = 2;
  if (f == RootFamily::B) {
    for (int k = 1; k < r; ++k) {
      std::vector<long long> v(r, 0);
      for (int i = 0; i < k; ++i) v[i] = 2;
      w.push_back(v);
    }
    w.push_back(std::vector<long long>(r, 1));
  } else if (f == RootFamily::C) {
    for (int k = 1; k <= r; ++k) {
      std::vector<long long> v(r, 0);
      for (int i = 0; i < k; ++i) v[i] = 2;
      w.push_back(v);
    }
  } else {  // D
    for (int k = 1; k <= r - 2; ++k) {
      std::vector<long long> v(r, 0);
      for (int i = 0; i < k; ++i) v[i] = 2;
      w.push_back(v);
    }
    std::vector<long long> vm(r, 1);
    vm[r - 1] = -1;
    w.push_back(vm);
    w.push_back(std::vector<long long>(r, 1));
  }
  return w;
}

}  // namespace

RootFamily root_family_from_char(char c) {
  switch (c) {
    case 'A': return RootFamily::A;
    case 'B': return RootFamily::B;
    case 'C': return RootFamily::C;
    case 'D': return RootFamily::D;
  }
  throw UnsupportedFamily(std::string("unknown root family: ") + c);
}

std::pair<RootFamily, int> root_system_of(const std::string& family, int n) {
  if (family == "su") return {RootFamily::A, n - 1};
  if (family == "sp") return {RootFamily::C, n};
  if (family == "so")
    return (n % 2) ? std::pair{RootFamily::B, (n - 1) / 2}
                   : std::pair{RootFamily::D, n / 2};
  throw UnsupportedFamily("no classical root system for " + family);
}

std::int64_t weyl_dimension(RootFamily family, int rank, const WeightVector& w) {
  if (rank < 1) throw RankTooSmall("weyl_dimension: rank must be >= 1");
  if (family == RootFamily::D && rank < 2)
    throw RankTooSmall("weyl_dimension: D needs rank >= 2");
  if (static_cast<int>(w.coeffs.size()) != rank)
    throw DimMismatch("weyl_dimension: weight length != rank");

  long long scale = 1;
  auto fund = fundamental_weights_scaled(family, rank, scale);
  const size_t dim = fund[0].size();
  std::vector<long long> lam(dim, 0), delta(dim, 0);
  for (int k = 0; k < rank; ++k)
    for (size_t i = 0; i < dim; ++i) {
      lam[i] += static_cast<long long>(w.coeffs[k]) * fund[k][i];
      delta[i] += fund[k][i];
    }

  cpp_int num = 1, den = 1;
  for (const auto& a : positive_roots(family, rank)) {
    long long top = 0, bot = 0;
    for (size_t i = 0; i < dim; ++i) {
      top += (lam[i] + delta[i]) * a[i];
      bot += delta[i] * a[i];
    }
    num *= top;
    den *= bot;
  }
  cpp_int q = num / den;
  if (q * den != num)
    throw NonIntegerResult("weyl_dimension: non-integer value (root system bug)");
  if (q <= 0 || q > cpp_int(std::numeric_limits<std::int64_t>::max()))
    throw NonIntegerResult("weyl_dimension: value out of range");
  return static_cast<std::int64_t>(q);
}

}  // namespace gohom
