#pragma once

#include <optional>
#include <vector>

#include "spherica/lattice.hpp"

namespace spherica {

// Exact feasibility over Q: phase-one simplex with Bland's rule.
class LinearProgram {
 public:
  enum class Rel { LE, EQ, GE };

  // A variable with a lower bound, or a free variable when `lower` is empty.
  size_t add_var(std::optional<Rat> lower = Rat(0));
  size_t vars() const { return lower_.size(); }
  void add(const QVec& coeffs, Rel rel, const Rat& rhs);
  void add(const Vec& coeffs, Rel rel, const Rat& rhs);

  std::optional<QVec> feasible_point() const;

 private:
  std::vector<std::optional<Rat>> lower_;
  std::vector<QVec> rows_;
  std::vector<Rel> rels_;
  std::vector<Rat> rhs_;
};

// Smallest positive integer multiple of a rational vector.
Vec clear_denominators(const QVec& v);

}  // namespace spherica
