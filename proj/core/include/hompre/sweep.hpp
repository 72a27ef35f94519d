#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hompre/algebra.hpp"
#include "hompre/matched_pair.hpp"
#include "hompre/representation.hpp"

namespace hompre {

/// 64-bit linear congruential generator, x ← 6364136223846793005·x + 1442695040888963407
/// (mod 2⁶⁴). Draws use the high 32 bits.
class Lcg {
public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n) for n ≥ 1.
  std::size_t below(std::size_t n);
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
  std::uint64_t state_;
};

/// Seed of the index-th candidate, independent of how work is partitioned.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// All valid dim-2 Hom-pre-Lie algebras with product entries in {−1,0,1} and
/// the given twist, in lexicographic order.
std::vector<HomPreLieAlgebra> small_corpus(const LinearMap& twist);

/// Tally of a biconditional sweep.
struct SweepStats {
  std::size_t candidates = 0;
  std::size_t both_hold = 0;
  std::size_t both_fail = 0;
  std::size_t disagreements = 0;
  std::vector<std::size_t> disagreement_indices;

  bool all_agree() const { return disagreements == 0; }
  void record(std::size_t index, bool lhs, bool rhs);
  std::string summary() const;
};

struct SweepConfig {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t workers = 1;
};

/// Candidates at dims 2+2 over {−1,0,1}: standard pairs from corpus algebras,
/// zero actions, and sparse random actions.
LieMatchedPair lie_pair_candidate(std::uint64_t seed);
PreLieMatchedPair pre_lie_pair_candidate(std::uint64_t seed);
/// A dual-side algebra candidate on A* with twist (α⁻¹)*: corpus products and
/// raw random products.
HomPreLieAlgebra dual_product_candidate(const HomPreLieAlgebra& a, std::uint64_t seed);

struct OperatorCandidate {
  HomPreLieRep rep;
  LinearMap T;
};
/// A valid representation of a corpus algebra with an intertwining T
/// (Tβ = αT) drawn from {−1,0,1}.
OperatorCandidate operator_candidate(std::uint64_t seed);

/// double_lie validity against matched-pair validity.
SweepStats sweep_double_lie(const SweepConfig& cfg);
/// double_pre_lie validity against matched-pair validity.
SweepStats sweep_double_pre_lie(const SweepConfig& cfg);
/// Lie and pre-Lie matched-pair verdicts of the standard pairs.
SweepStats sweep_matched_equiv(const SweepConfig& cfg);
/// Bialgebra, matched-pair and Manin verdicts over dual products on a;
/// both_hold counts instances where all three hold.
SweepStats sweep_equivalence(const HomPreLieAlgebra& a, const SweepConfig& cfg);
/// s-matrix verdict of r_T against the O-operator verdict of Tβ.
SweepStats sweep_semidirect(const SweepConfig& cfg);

}  // namespace hompre
