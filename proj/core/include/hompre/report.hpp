#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hompre/linalg.hpp"

namespace hompre {

/// One violated identity at one basis tuple. Witness indices are zero-based;
/// rendering prints them one-based as e1, e2, ...
struct Failure {
  std::string identity;
  std::vector<std::size_t> witness;
  Vector residual;
};

/// Outcome of a validator or theorem check. valid() holds exactly when no
/// failure was recorded. Composite checks also record named sub-verdicts.
class ValidationReport {
public:
  bool valid() const { return failures_.empty(); }
  std::size_t failure_count() const { return failures_.size(); }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<std::pair<std::string, bool>>& verdicts() const { return verdicts_; }

  void fail(std::string identity, std::vector<std::size_t> witness = {}, Vector residual = {});
  /// Records a failure only when residual is nonzero.
  void expect_zero(const std::string& identity, std::vector<std::size_t> witness, const Vector& residual);
  void add_verdict(std::string name, bool value);
  /// Returns the recorded sub-verdict; throws std::out_of_range if absent.
  bool verdict(const std::string& name) const;
  /// Appends other's failures with identity names prefixed by "prefix/".
  void absorb(const ValidationReport& other, const std::string& prefix);

  /// First failure of the named identity, or nullptr.
  const Failure* first(const std::string& identity) const;
  bool has_failure(const std::string& identity) const { return first(identity) != nullptr; }

  /// Human-readable text. Non-verbose output shows the first witness per
  /// identity and a count of the rest.
  std::string render(bool verbose = false) const;

private:
  std::vector<Failure> failures_;
  std::vector<std::pair<std::string, bool>> verdicts_;
};

/// "(e1,e2,e2)" for zero-based witness {0,1,1}.
std::string format_witness(const std::vector<std::size_t>& witness);

}  // namespace hompre
