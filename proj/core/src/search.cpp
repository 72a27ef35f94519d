#include "hompre/search.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "hompre/errors.hpp"
#include "hompre/sweep.hpp"
#include "parallel.hpp"

namespace hompre {

namespace {

constexpr std::array<std::string_view, 5> kTargets = {"hom_pre_lie", "s_matrix", "hessian", "dendriform",
                                                      "o_operator"};

struct Context {
  SearchTarget target;
  std::size_t n = 0;
  std::size_t m = 0;  // representation space for o_operator
  LinearMap twist;
  std::optional<HomPreLieAlgebra> algebra;
  std::optional<HomPreLieRep> rep;
};

Context make_context(const SearchSpec& spec) {
  Context c{spec.target, spec.dim, 0, {}, {}, {}};
  switch (spec.target) {
    case SearchTarget::hom_pre_lie:
    case SearchTarget::dendriform:
      c.twist = spec.twist ? *spec.twist : LinearMap::identity(c.n);
      if (c.twist.rows() != c.n || c.twist.cols() != c.n) throw DimensionMismatch("twist does not match --dim");
      break;
    case SearchTarget::s_matrix:
    case SearchTarget::hessian: {
      if (!spec.base || !spec.base->holds<HomPreLieAlgebra>())
        throw InvalidInput(std::string(target_name(spec.target)) + " search needs a hom_pre_lie base document");
      c.algebra = spec.base->as<HomPreLieAlgebra>();
      if (!validate_hom_pre_lie(*c.algebra).valid()) throw InvalidInput("search base is not a Hom-pre-Lie algebra");
      c.n = c.algebra->dim;
      break;
    }
    case SearchTarget::o_operator: {
      if (!spec.base || !spec.base->holds<HomPreLieRep>())
        throw InvalidInput("o_operator search needs a representation base document");
      c.rep = spec.base->as<HomPreLieRep>();
      c.n = c.rep->algebra.dim;
      c.m = c.rep->space_dim;
      break;
    }
  }
  return c;
}

std::size_t free_count(const Context& c) {
  switch (c.target) {
    case SearchTarget::hom_pre_lie: return c.n * c.n * c.n;
    case SearchTarget::s_matrix:
    case SearchTarget::hessian: return c.n * (c.n + 1) / 2;
    case SearchTarget::dendriform: return 2 * c.n * c.n * c.n;
    case SearchTarget::o_operator: return c.n * c.m;
  }
  return 0;
}

Tensor2 symmetric_from(std::size_t n, const std::vector<Scalar>& e) {
  Tensor2 r(n, n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++p) {
      r(i, j) = e[p];
      r(j, i) = e[p];
    }
  return r;
}

Tensor3 cube_from(std::size_t n, const std::vector<Scalar>& e, std::size_t offset) {
  Tensor3 t = Tensor3::cube(n);
  std::size_t p = offset;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = e[p++];
  return t;
}

std::optional<Document> evaluate(const Context& c, const std::vector<Scalar>& e) {
  switch (c.target) {
    case SearchTarget::hom_pre_lie: {
      HomPreLieAlgebra a{c.n, cube_from(c.n, e, 0), c.twist};
      if (is_hom_pre_lie(a)) return Document(std::move(a));
      return std::nullopt;
    }
    case SearchTarget::s_matrix: {
      Tensor2 r = symmetric_from(c.n, e);
      if (is_hom_s_matrix(*c.algebra, r)) return Document(std::move(r));
      return std::nullopt;
    }
    case SearchTarget::hessian: {
      BilinearForm b{c.n, symmetric_from(c.n, e), Symmetry::symmetric};
      if (validate_hessian(*c.algebra, b).valid()) return Document(std::move(b));
      return std::nullopt;
    }
    case SearchTarget::dendriform: {
      HomLDendriform d{c.n, cube_from(c.n, e, 0), cube_from(c.n, e, c.n * c.n * c.n), c.twist};
      if (validate_l_dendriform(d).valid()) return Document(std::move(d));
      return std::nullopt;
    }
    case SearchTarget::o_operator: {
      LinearMap t(c.n, c.m, e);
      OOperator o{*c.rep, std::move(t)};
      if (validate_o_operator(o).valid()) return Document(std::move(o));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Saturating power; returns max+1 sentinel semantics via the bool.
bool power_within(std::uint64_t base, std::size_t exp, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return false;
    out *= base;
  }
  return out <= cap;
}

}  // namespace

std::string_view target_name(SearchTarget t) { return kTargets[static_cast<std::size_t>(t)]; }

SearchTarget target_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTargets.size(); ++i)
    if (kTargets[i] == name) return static_cast<SearchTarget>(i);
  throw InvalidInput("unknown search target \"" + std::string(name) + "\"");
}

std::size_t free_entries(const SearchSpec& spec) { return free_count(make_context(spec)); }

std::vector<Document> run_search(const SearchSpec& spec) {
  if (spec.limit == 0) return {};
  const Context ctx = make_context(spec);
  std::vector<Scalar> coeffs = spec.coefficients;
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  if (coeffs.empty()) throw InvalidInput("empty coefficient set");
  const std::size_t width = free_count(ctx);
  const std::size_t base = coeffs.size();

  std::uint64_t total = spec.budget;
  if (spec.mode == SearchMode::exhaustive) {
    if (!power_within(base, width, spec.budget, total))
      throw BudgetExceeded("exhaustive search needs " + std::to_string(base) + "^" + std::to_string(width) +
                           " candidates, budget is " + std::to_string(spec.budget));
  }

  auto candidate = [&](std::uint64_t index) {
    std::vector<Scalar> e(width);
    if (spec.mode == SearchMode::exhaustive) {
      std::uint64_t code = index;
      for (std::size_t p = width; p-- > 0;) {
        e[p] = coeffs[code % base];
        code /= base;
      }
    } else {
      Lcg g(derive_seed(spec.seed, index));
      for (auto& s : e) s = coeffs[g.below(base)];
    }
    return e;
  };

  std::vector<Document> out;
  std::set<std::string> seen;
  const std::size_t workers = std::max<std::size_t>(1, spec.workers);
  const std::uint64_t batch = 2048;
  for (std::uint64_t lo = 0; lo < total && out.size() < spec.limit; lo += batch) {
    const std::uint64_t hi = std::min(total, lo + batch);
    std::vector<std::optional<Document>> hits(hi - lo);
    detail::parallel_for(lo, hi, workers, [&](std::size_t i) { hits[i - lo] = evaluate(ctx, candidate(i)); });
    for (auto& h : hits) {
      if (!h) continue;
      if (!seen.insert(serialize(*h)).second) continue;
      out.push_back(std::move(*h));
      if (out.size() >= spec.limit) break;
    }
  }
  return out;
}

}  // namespace hompre
