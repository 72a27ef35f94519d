#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "hompre/document.hpp"

namespace hompre {

enum class SearchTarget { hom_pre_lie, s_matrix, hessian, dendriform, o_operator };
enum class SearchMode { exhaustive, seeded };

std::string_view target_name(SearchTarget t);
/// Throws InvalidInput for an unknown name.
SearchTarget target_from_name(std::string_view name);

struct SearchSpec {
  SearchTarget target = SearchTarget::hom_pre_lie;
  std::size_t dim = 2;
  std::vector<Scalar> coefficients{-1, 0, 1};
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Ambient structure: a hom_pre_lie algebra for s_matrix and hessian, a
  /// representation for o_operator. dim is taken from it when present.
  std::optional<Document> base;
  /// Twist for hom_pre_lie and dendriform targets; identity when absent.
  std::optional<LinearMap> twist;
  /// Exhaustive mode: maximum number of candidates. Seeded mode: maximum
  /// number of draws.
  std::uint64_t budget = 1'000'000;
  std::size_t workers = 1;
};

/// Number of free coefficients a candidate of this spec carries.
std::size_t free_entries(const SearchSpec& spec);

/// Valid structures in deterministic order: lexicographic over the sorted
/// coefficient set in exhaustive mode, draw order in seeded mode. Duplicates
/// are dropped and the output is independent of the worker count.
/// Throws BudgetExceeded when an exhaustive enumeration exceeds the budget and
/// InvalidInput when the base document is missing or of the wrong kind.
std::vector<Document> run_search(const SearchSpec& spec);

}  // namespace hompre
