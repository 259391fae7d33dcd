#include "spherica/report.hpp"

#include <algorithm>

namespace spherica {

AxiomResult& ValidationReport::entry(const std::string& axiom) {
  for (auto& r : results_)
    if (r.axiom == axiom) return r;
  results_.push_back({axiom, true, {}});
  return results_.back();
}

void ValidationReport::check(const std::string& axiom) { entry(axiom); }

void ValidationReport::fail(const std::string& axiom, const std::string& witness) {
  auto& e = entry(axiom);
  e.passed = false;
  e.witnesses.push_back(witness);
}

bool ValidationReport::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const AxiomResult& r) { return r.passed; });
}

bool ValidationReport::passed(const std::string& axiom) const {
  for (const auto& r : results_)
    if (r.axiom == axiom) return r.passed;
  return true;
}

std::vector<std::string> ValidationReport::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& r : results_)
    if (!r.passed) out.push_back(r.axiom);
  return out;
}

std::string ValidationReport::text() const {
  std::string s;
  for (const auto& r : results_) {
    s += (r.passed ? "pass " : "FAIL ") + r.axiom + "\n";
    for (const auto& w : r.witnesses) s += "  " + w + "\n";
  }
  return s;
}

}  // namespace spherica
