#pragma once

#include <vector>

#include "spherica/fans.hpp"
#include "spherica/luna.hpp"
#include "spherica/report.hpp"

namespace spherica {

struct AdmissibleMap {
  RootSystem rs;
  std::vector<std::vector<int>> eta;

  int operator()(int a, int b) const { return eta[a][b]; }
  // Pi_eta, sorted.
  std::vector<int> support() const;
  bool operator==(const AdmissibleMap& o) const { return rs == o.rs && eta == o.eta; }
};

AdmissibleMap make_admissible(const RootSystem& rs, const std::vector<std::vector<long>>& eta);

// Axioms AM1..AM5; a non-square or out-of-range matrix fails "shape".
ValidationReport validate_admissible(const AdmissibleMap& m);

struct EnriquesBSystem {
  RootSystem rs;
  // Basis of the sublattice X of X(T), in weight coordinates. The fan lives
  // in Hom(X, Q) written in the dual basis.
  std::vector<Vec> lattice_basis;
  Fan fan;
  // rho(alpha) per simple root; the zero vector stands for 0.
  std::vector<Vec> rho;
};

ValidationReport validate_enriques(const EnriquesBSystem& e);

struct FanEta {
  EnriquesBSystem system;
  std::vector<int> pi_eta;
  // Groups Pi_1..Pi_s and rays rho_1..rho_s; beta_i is the lowest eligible index.
  std::vector<std::vector<int>> groups;
  std::vector<Vec> group_rays;
  // Subsets of Pi_eta on which rho is injective, one cone each.
  std::vector<std::vector<int>> injective_subsets;
  Cone c_empty;
};

// Throws std::invalid_argument if eta is not admissible.
FanEta build_fan_eta(const AdmissibleMap& m);

struct MarkedSystem {
  SphericalSystem system;
  std::vector<size_t> marked;  // the colors D_alpha^+
};

// Colors: D^+ keyed by distinct rho values in order of first appearance,
// then D_alpha^- for alpha in Pi_eta.
MarkedSystem spherical_system_of_admissible(const AdmissibleMap& m);

// Throws std::invalid_argument unless dsc is a strong-solvability witness.
AdmissibleMap admissible_from_system(const SphericalSystem& s, const std::vector<size_t>& dsc);

}  // namespace spherica
