#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gohom/isotropy.hpp"
#include "gohom/spaces.hpp"
#include "gohom/weyl.hpp"

namespace gohom {

/// Simple algebra tag: classical (family:n) or exceptional (G2/F4/E6/E7/E8,
/// carrying only the literature dimension for bookkeeping).
struct AlgebraTag {
  std::string family;  // "su", "so", "sp", "G2", "F4", "E6", "E7", "E8"
  int n = 0;           // 0 for exceptional
  bool classical() const;
  int dim() const;
  std::string str() const;
};

/// One isotropy summand: either a highest weight in k's root system with a
/// multiplicity (contributing mult * weyl_dimension real dimensions), or a
/// recorded plain dimension for exceptional k.
struct IsotropySummand {
  int mult = 1;
  std::optional<WeightVector> weight;  // in k's root system
  int recorded_dim = 0;                // used when weight is absent
};

struct ExpectedIsotropy {
  // tag in {trivial, trivial-note, finite, torus, subgroup}; dim set for
  // torus/subgroup. trivial-note marks discrete principal isotropy (reports
  // dim 0 at the algebra level), finite likewise.
  std::string tag = "trivial";
  int dim = 0;
  int expected_dim() const { return tag == "torus" || tag == "subgroup" ? dim : 0; }
  bool abelian_expected() const { return tag == "torus"; }
};

struct PairEntry {
  std::string case_id;
  AlgebraTag k, g1, g2;
  std::vector<IsotropySummand> rho1, rho2;
  ExpectedIsotropy iso1, iso2;
  bool constructible = false;
  bool needs_review = false;
  std::string emb1, emb2;  // "block" or rep tree; empty if not constructible
};

struct ValidationReport {
  std::string case_id;
  bool pass = false;
  int dim_g1 = 0, dim_g2 = 0, dim_k = 0;
  int rho1_dim = 0, rho2_dim = 0;
  double c1 = 0.0, c2 = 0.0;  // filled for constructible entries
  std::string message;
};

class Catalog {
 public:
  explicit Catalog(const std::string& data_path);

  const std::vector<PairEntry>& entries() const { return entries_; }
  const PairEntry& lookup(const std::string& case_id) const;
  template <typename Pred>
  std::vector<PairEntry> filter(Pred pred) const {
    std::vector<PairEntry> out;
    for (const auto& e : entries_)
      if (pred(e)) out.push_back(e);
    return out;
  }
  int count_with_prefix(char type) const;

 private:
  std::vector<PairEntry> entries_;
};

/// Dimension bookkeeping (and space construction + killing_ratio for
/// constructible entries). Failures are reported, not thrown.
ValidationReport validate_entry(const PairEntry& entry);

/// Builds the pair space of a constructible entry.
SpacePtr build_entry_space(const PairEntry& entry);

/// Builds the embedding of a constructible entry's factor i (1 or 2).
Embedding build_entry_embedding(const PairEntry& entry, int factor);

/// Isotropy representation of k on the complement of emb(k) in g, expressed
/// in an orthonormal basis of the complement (operators are skew).
Representation isotropy_rep(const Embedding& emb);

struct IsotropyCrossCheck {
  std::string case_id;
  StabilizerReport rep1, rep2;
  bool matches_expected = false;
  std::string classification;  // case1 / case2 / neither
  bool alarm = false;          // neither fired
};

/// Computes generic stabilizers of both isotropy reps of a constructible
/// entry, compares with the expected tags, and evaluates the dichotomy.
IsotropyCrossCheck cross_check_isotropy(const PairEntry& entry,
                                        int trials = 20,
                                        std::uint64_t seed = 42);

/// Dichotomy from the expected tags alone (works for every entry).
std::string classify_expected(const PairEntry& entry);

}  // namespace gohom
