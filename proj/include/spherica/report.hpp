#pragma once

#include <string>
#include <vector>

namespace spherica {

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::vector<std::string> witnesses;
};

class ValidationReport {
 public:
  // Registers the axiom as passing if it was not seen before.
  void check(const std::string& axiom);
  void fail(const std::string& axiom, const std::string& witness);
  bool ok() const;
  bool passed(const std::string& axiom) const;
  const std::vector<AxiomResult>& results() const { return results_; }
  std::vector<std::string> failed_axioms() const;
  std::string text() const;

 private:
  AxiomResult& entry(const std::string& axiom);
  std::vector<AxiomResult> results_;
};

}  // namespace spherica
