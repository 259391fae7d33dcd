#pragma once

#include <vector>

#include "spherica/ars.hpp"
#include "spherica/lattice.hpp"
#include "spherica/luna.hpp"

namespace spherica {

// Free generators (lambda, chi) of the extended weight semigroup together
// with the central block (nu, -nu_H).
struct EWSGenerators {
  RootSystem rs;
  size_t central_rank = 0;
  FgAbelianGroup character_group;  // X(H)
  std::vector<Vec> lambda;         // dominant weights, semisimple coordinates
  std::vector<Vec> chi;            // elements of X(H), unreduced
  std::vector<Vec> central;        // nu_H for each basis character of X(C)
};

struct EWSColor {
  ColorType type;
  std::vector<int> simple;  // alpha with D in D(alpha)
  Vec lambda, chi;
  Vec kappa;  // on the lattice basis
};

struct EWSInvariants {
  RootSystem rs;
  size_t central_rank = 0;
  Sublattice lattice;
  std::vector<int> pi_p;
  std::vector<EWSColor> colors;      // one per generator
  std::vector<Vec> sigma_detected;   // Sigma ∩ (Pi ∪ 2Pi), as characters

  // D^a = colors of type a, Sigma = sigma_detected. Complete only when
  // Sigma ⊂ Pi ∪ 2Pi, e.g. in the strongly solvable case.
  HomogeneousSphericalDatum datum() const;
};

// Throws std::invalid_argument naming a dependency if the family is not free.
EWSInvariants invariants_from_ews(const EWSGenerators& g);

struct CharacterGroup {
  FullColorSet colors;
  // X(H) = (Z^D + X(C)) / Ker psi; chi_D is the D-th unit vector, the
  // central characters follow.
  FgAbelianGroup group;
};
CharacterGroup character_group_from_hsd(const HomogeneousSphericalDatum& d);

std::vector<Vec> lambda_d_of_colors(const RootSystem& rs, const FullColorSet& fc);
std::vector<Vec> lambda_d_of_colors(const SphericalSystem& s);

// Generators (lambda_D, chi_D) over the full color set of d.
EWSGenerators ews_from_hsd(const HomogeneousSphericalDatum& d);
// Omega_alpha for every simple root and Omega_phi for every class.
EWSGenerators ews_generators_from_ars(const ExtendedARSSet& e);

}  // namespace spherica
