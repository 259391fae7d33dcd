#pragma once

#include <vector>

#include "spherica/admissible.hpp"
#include "spherica/lattice.hpp"
#include "spherica/luna.hpp"
#include "spherica/report.hpp"
#include "spherica/rootsys.hpp"

namespace spherica {

// True iff (alpha, delta) is one of the active-root patterns. Throws
// std::invalid_argument if alpha is not a positive root or delta is not in
// its support.
bool check_active_pattern(const RootSystem& rs, const RootVec& alpha, int delta);

// A simple root delta of Supp alpha joined to exactly one other node of Supp alpha.
bool is_terminal(const RootSystem& rs, const RootVec& alpha, int delta);

// F(alpha): alpha followed by the positive roots beta with alpha - beta a
// root and pi(alpha) outside Supp beta. Throws std::invalid_argument if the
// pattern check fails or pi is not a bijection F(alpha) -> Supp alpha.
std::vector<RootVec> subordinate_closure(const RootSystem& rs, const RootVec& alpha, int pi);

struct ARSSet {
  RootSystem rs;
  std::vector<RootVec> m;
  std::vector<int> pi;
  // Class label per root of M; equal labels mean equivalent roots.
  std::vector<size_t> cls;

  std::vector<int> pi0() const;
  bool operator==(const ARSSet& o) const = default;
};

// M sorted by decreasing coordinates, labels renumbered by first appearance.
ARSSet canonical(const ARSSet& a);

struct ExtendedARSSet {
  ARSSet ars;
  size_t central_rank = 0;
  // Ker tau inside X(T), in weight coordinates.
  Sublattice ker_tau;
};

// Z{alpha - beta | alpha ~ beta in M} inside X(T).
Sublattice equivalence_lattice(const ARSSet& a, size_t central_rank = 0);
// Ker tau = Z{alpha - beta}: the spherical closure, which is wonderful.
ExtendedARSSet wonderful_extension(const ARSSet& a, size_t central_rank = 0);
ExtendedARSSet normalize(const ExtendedARSSet& e);
bool is_wonderful(const ExtendedARSSet& e);

struct ActiveRootSystem {
  RootSystem rs;
  std::vector<RootVec> psi;
  std::vector<int> pi;       // per root of psi
  std::vector<size_t> phi;   // class index per root of psi
  size_t phi_count = 0;

  std::vector<std::vector<RootVec>> classes() const;
  std::vector<int> pi0() const;
  // phi[alpha] for alpha in Pi_0, -1 elsewhere.
  std::vector<int> phi_of_simple() const;
  // Maximal roots with their pi and classes.
  ARSSet maximal() const;
};

// Classes compared as a set of sets of roots.
bool same_classes(const std::vector<std::vector<RootVec>>& a, const std::vector<std::vector<RootVec>>& b);

ValidationReport validate_ars(const ARSSet& a);
ValidationReport validate_extended(const ExtendedARSSet& e);

// Throws std::invalid_argument if a fails validation; std::logic_error if the
// equivalence does not close up consistently.
ActiveRootSystem expand_ars(const ARSSet& a);

// pi on a set of active roots, from the rule: for beta = beta1 + beta2 with
// both summands positive roots, beta1 is active iff pi(beta) is outside
// Supp beta1. Throws std::logic_error if some root has no unique answer.
std::vector<int> derive_pi(const RootSystem& rs, const std::vector<RootVec>& psi);

// J(phi, mu) for every class phi. Throws std::invalid_argument if mu lies
// outside Z Pi_0 + Ker tau or the classes are dependent modulo Ker tau.
std::vector<Int> tau_j(const ExtendedARSSet& e, const Vec& mu);

// Classes independent modulo Ker tau.
bool check_sphericity_combinatorial(const ExtendedARSSet& e);

AdmissibleMap admissible_from_ars(const ExtendedARSSet& e);
ActiveRootSystem ars_from_admissible(const AdmissibleMap& m);

HomogeneousSphericalDatum hsd_from_ars(const ExtendedARSSet& e);
// D' indexes d.colors. Throws std::invalid_argument unless it is a witness.
ExtendedARSSet ars_from_hsd(const HomogeneousSphericalDatum& d, const std::vector<size_t>& dsc);

// Same lattice, Pi^p, Sigma as a set and colors as a multiset.
bool same_datum(const HomogeneousSphericalDatum& a, const HomogeneousSphericalDatum& b);

// Angle, lattice, shift, pi-disjointness and tau laws on the expansion.
ValidationReport structural_laws(const ExtendedARSSet& e);

}  // namespace spherica
