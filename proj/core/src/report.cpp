#include "hompre/report.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hompre {

void ValidationReport::fail(std::string identity, std::vector<std::size_t> witness, Vector residual) {
  failures_.push_back({std::move(identity), std::move(witness), std::move(residual)});
}

void ValidationReport::expect_zero(const std::string& identity, std::vector<std::size_t> witness,
                                   const Vector& residual) {
  if (!residual.is_zero()) fail(identity, std::move(witness), residual);
}

void ValidationReport::add_verdict(std::string name, bool value) { verdicts_.emplace_back(std::move(name), value); }

bool ValidationReport::verdict(const std::string& name) const {
  for (const auto& [n, v] : verdicts_)
    if (n == name) return v;
  throw std::out_of_range("no verdict named " + name);
}

void ValidationReport::absorb(const ValidationReport& other, const std::string& prefix) {
  for (const auto& f : other.failures_) failures_.push_back({prefix + "/" + f.identity, f.witness, f.residual});
}

const Failure* ValidationReport::first(const std::string& identity) const {
  for (const auto& f : failures_)
    if (f.identity == identity) return &f;
  return nullptr;
}

std::string format_witness(const std::vector<std::size_t>& witness) {
  std::string s = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ',';
    s += 'e' + std::to_string(witness[i] + 1);
  }
  return s + ')';
}

std::string ValidationReport::render(bool verbose) const {
  std::ostringstream os;
  for (const auto& [name, v] : verdicts_) os << "verdict " << name << ": " << (v ? "holds" : "fails") << '\n';
  if (failures_.empty()) {
    os << "valid\n";
    return os.str();
  }
  os << "invalid: " << failures_.size() << (failures_.size() == 1 ? " failure\n" : " failures\n");
  std::map<std::string, std::size_t> seen;
  for (const auto& f : failures_) {
    const std::size_t n = seen[f.identity]++;
    if (!verbose && n > 0) continue;
    os << "  " << f.identity;
    if (!f.witness.empty()) os << " at " << format_witness(f.witness);
    if (f.residual.size() > 0) os << " residual " << f.residual;
    os << '\n';
  }
  if (!verbose) {
    for (const auto& [name, n] : seen)
      if (n > 1) os << "  " << name << ": " << (n - 1) << " more\n";
  }
  return os.str();
}

}  // namespace hompre
