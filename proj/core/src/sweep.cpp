#include "hompre/sweep.hpp"

#include <array>
#include <sstream>

#include "hompre/bialgebra.hpp"
#include "hompre/dendriform.hpp"
#include "hompre/document.hpp"
#include "hompre/errors.hpp"
#include "hompre/search.hpp"
#include "parallel.hpp"

namespace hompre {

namespace {

constexpr std::size_t kDim = 2;

LinearMap flip_twist() { return LinearMap::diagonal({-1, 1}); }

// The two self-dual twists used by the candidate generators.
const std::vector<HomPreLieAlgebra>& corpus(bool flipped) {
  static const std::vector<HomPreLieAlgebra> id = small_corpus(LinearMap::identity(kDim));
  static const std::vector<HomPreLieAlgebra> fl = small_corpus(flip_twist());
  return flipped ? fl : id;
}

const std::vector<HomPreLieAlgebra>* corpus_for(const LinearMap& twist) {
  if (twist == LinearMap::identity(kDim)) return &corpus(false);
  if (twist == flip_twist()) return &corpus(true);
  return nullptr;
}

template <typename T>
const T& pick(Lcg& g, const std::vector<T>& v) {
  return v[g.below(v.size())];
}

Scalar unit_or_zero(Lcg& g) { return Scalar(static_cast<std::int64_t>(g.below(3)) - 1); }

// Entries nonzero with probability 1/4, then ±1.
LinearMap sparse_map(Lcg& g, std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.chance(1, 4)) m(i, j) = g.chance(1, 2) ? Scalar(1) : Scalar(-1);
  return m;
}

MapFamily sparse_family(Lcg& g, std::size_t n) {
  MapFamily f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(sparse_map(g, n));
  return f;
}

MapFamily zero_family(std::size_t n) { return MapFamily(n, LinearMap(n, n)); }

Tensor3 raw_product(Lcg& g, std::size_t n) {
  Tensor3 t = Tensor3::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = unit_or_zero(g);
  return t;
}

Tensor3 raw_skew_bracket(Lcg& g, std::size_t n) {
  Tensor3 t = Tensor3::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        t(i, j, k) = unit_or_zero(g);
        t(j, i, k) = -t(i, j, k);
      }
  return t;
}

template <typename Eval>
SweepStats run_sweep(const SweepConfig& cfg, Eval eval) {
  std::vector<std::pair<bool, bool>> out(cfg.count);
  detail::parallel_for(0, cfg.count, cfg.workers, [&](std::size_t i) { out[i] = eval(derive_seed(cfg.seed, i)); });
  SweepStats s;
  for (std::size_t i = 0; i < cfg.count; ++i) s.record(i, out[i].first, out[i].second);
  return s;
}

}  // namespace

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

std::size_t Lcg::below(std::size_t n) {
  if (n == 0) throw InvalidInput("Lcg::below(0)");
  return static_cast<std::size_t>((next() >> 32) % n);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<HomPreLieAlgebra> small_corpus(const LinearMap& twist) {
  SearchSpec spec;
  spec.target = SearchTarget::hom_pre_lie;
  spec.dim = kDim;
  spec.twist = twist;
  std::vector<HomPreLieAlgebra> out;
  for (const Document& d : run_search(spec)) out.push_back(d.as<HomPreLieAlgebra>());
  return out;
}

void SweepStats::record(std::size_t index, bool lhs, bool rhs) {
  ++candidates;
  if (lhs && rhs)
    ++both_hold;
  else if (!lhs && !rhs)
    ++both_fail;
  else {
    ++disagreements;
    disagreement_indices.push_back(index);
  }
}

std::string SweepStats::summary() const {
  std::ostringstream os;
  os << "candidates=" << candidates << " both_hold=" << both_hold << " both_fail=" << both_fail
     << " disagreements=" << disagreements;
  return os.str();
}

LieMatchedPair lie_pair_candidate(std::uint64_t seed) {
  Lcg g(seed);
  const auto& c = corpus(g.chance(1, 4));
  switch (g.below(4)) {
    case 0: {
      const HomPreLieAlgebra& a = pick(g, c);
      return standard_lie_matched_pair(a, pick(g, c));
    }
    case 1:
      return {sub_adjacent(pick(g, c)), sub_adjacent(pick(g, c)), zero_family(kDim), zero_family(kDim)};
    case 2: {
      HomLieAlgebra gl = sub_adjacent(pick(g, c));
      HomLieAlgebra h = sub_adjacent(pick(g, c));
      return {std::move(gl), std::move(h), sparse_family(g, kDim), sparse_family(g, kDim)};
    }
    default: {
      const HomPreLieAlgebra& a = pick(g, c);
      HomLieAlgebra gl{kDim, raw_skew_bracket(g, kDim), a.twist};
      HomLieAlgebra h = sub_adjacent(pick(g, c));
      return {std::move(gl), std::move(h), sparse_family(g, kDim), sparse_family(g, kDim)};
    }
  }
}

PreLieMatchedPair pre_lie_pair_candidate(std::uint64_t seed) {
  Lcg g(seed);
  const auto& c = corpus(g.chance(1, 4));
  switch (g.below(5)) {
    case 0: {
      const HomPreLieAlgebra& a = pick(g, c);
      return standard_pre_lie_matched_pair(a, pick(g, c));
    }
    case 1:
      return {pick(g, c), pick(g, c), zero_family(kDim), zero_family(kDim), zero_family(kDim), zero_family(kDim)};
    case 2: {
      HomPreLieAlgebra a = pick(g, c);
      HomPreLieAlgebra b = pick(g, c);
      return {std::move(a), std::move(b), sparse_family(g, kDim), sparse_family(g, kDim), sparse_family(g, kDim),
              sparse_family(g, kDim)};
    }
    case 3: {
      // A valid representation of a on an abelian B.
      const HomPreLieAlgebra& a = pick(g, c);
      const HomPreLieRep r = g.chance(1, 2) ? regular_rep(a) : coadjoint_pre_lie_rep(a);
      HomPreLieAlgebra b{kDim, Tensor3::cube(kDim), r.beta};
      return {a, std::move(b), r.rho, r.mu, zero_family(kDim), zero_family(kDim)};
    }
    default: {
      const HomPreLieAlgebra& base = pick(g, c);
      HomPreLieAlgebra a{kDim, raw_product(g, kDim), base.twist};
      HomPreLieAlgebra b = pick(g, c);
      return {std::move(a), std::move(b), sparse_family(g, kDim), sparse_family(g, kDim), sparse_family(g, kDim),
              sparse_family(g, kDim)};
    }
  }
}

HomPreLieAlgebra dual_product_candidate(const HomPreLieAlgebra& a, std::uint64_t seed) {
  Lcg g(seed);
  const LinearMap twist = a.twist.inverse().transpose();
  const std::size_t n = a.dim;
  const auto* c = corpus_for(twist);
  const std::size_t kind = g.below(4);
  if (kind == 0 && c != nullptr && n == kDim) return pick(g, *c);
  if (kind == 1) {
    Tensor2 r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = unit_or_zero(g);
    if (check_pro1(a, r)) return dual_product_from_r(a, r);
  }
  if (kind == 3) return {n, Tensor3::cube(n), twist};
  return {n, raw_product(g, n), twist};
}

OperatorCandidate operator_candidate(std::uint64_t seed) {
  Lcg g(seed);
  const auto& c = corpus(g.chance(1, 4));
  const HomPreLieAlgebra& a = pick(g, c);
  const MapFamily L = left_family(a), R = right_family(a);
  std::vector<HomPreLieRep> families = {
      {a, kDim, a.twist, zero_family(kDim), zero_family(kDim)},
      regular_rep(a),
      shifted_rep(a, 1),
      shifted_rep(a, -1),
      coadjoint_pre_lie_rep_unchecked(a),
      {a, kDim, a.twist, L, zero_family(kDim)},
      {a, kDim, a.twist, L, L},
      {a, kDim, a.twist, zero_family(kDim), R},
  };
  std::vector<HomPreLieRep> valid;
  for (auto& r : families)
    if (validate_pre_lie_rep(r).valid()) valid.push_back(std::move(r));
  HomPreLieRep rep = pick(g, valid);

  std::vector<LinearMap> intertwiners;
  const std::size_t m = rep.space_dim;
  const std::size_t cells = kDim * m;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Scalar> e(cells);
    std::size_t x = code;
    for (std::size_t p = cells; p-- > 0; x /= 3) e[p] = Scalar(static_cast<std::int64_t>(x % 3) - 1);
    LinearMap T(kDim, m, std::move(e));
    if (T * rep.beta == a.twist * T) intertwiners.push_back(std::move(T));
  }
  LinearMap T = pick(g, intertwiners);
  return {std::move(rep), std::move(T)};
}

SweepStats sweep_double_lie(const SweepConfig& cfg) {
  return run_sweep(cfg, [](std::uint64_t s) {
    const LieMatchedPair mp = lie_pair_candidate(s);
    return std::pair{validate_hom_lie(double_lie(mp)).valid(), validate_matched_pair_lie(mp).valid()};
  });
}

SweepStats sweep_double_pre_lie(const SweepConfig& cfg) {
  return run_sweep(cfg, [](std::uint64_t s) {
    const PreLieMatchedPair mp = pre_lie_pair_candidate(s);
    return std::pair{validate_hom_pre_lie(double_pre_lie(mp)).valid(), validate_matched_pair_pre_lie(mp).valid()};
  });
}

SweepStats sweep_matched_equiv(const SweepConfig& cfg) {
  return run_sweep(cfg, [](std::uint64_t s) {
    Lcg g(s);
    const HomPreLieAlgebra& a = pick(g, corpus(g.chance(1, 4)));
    const HomPreLieAlgebra d = dual_product_candidate(a, g.next());
    const ValidationReport r = check_pre_lie_matched_equiv(a, d);
    return std::pair{r.verdict("lie-matched-pair"), r.verdict("pre-lie-matched-pair")};
  });
}

SweepStats sweep_equivalence(const HomPreLieAlgebra& a, const SweepConfig& cfg) {
  std::vector<std::array<bool, 3>> out(cfg.count);
  detail::parallel_for(0, cfg.count, cfg.workers, [&](std::size_t i) {
    const ValidationReport r = check_equivalence_theorem(a, dual_product_candidate(a, derive_seed(cfg.seed, i)));
    out[i] = {r.verdict("bialgebra"), r.verdict("matched-pair"), r.verdict("manin-triple")};
  });
  SweepStats s;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const auto& v = out[i];
    const bool same = v[0] == v[1] && v[1] == v[2];
    s.record(i, v[0], same ? v[0] : !v[0]);
  }
  return s;
}

SweepStats sweep_semidirect(const SweepConfig& cfg) {
  return run_sweep(cfg, [](std::uint64_t s) {
    const OperatorCandidate c = operator_candidate(s);
    const SemidirectSMatrix r = semidirect_smatrix(c.rep, c.T);
    return std::pair{r.verdict.verdict("s-matrix"), r.verdict.verdict("o-operator")};
  });
}

}  // namespace hompre
