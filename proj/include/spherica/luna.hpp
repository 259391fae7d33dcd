#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherica/lattice.hpp"
#include "spherica/report.hpp"
#include "spherica/rootsys.hpp"

namespace spherica {

// Characters of T are written in fundamental-weight coordinates of the
// simply connected semisimple part, followed by central coordinates.
Vec weight_of(const RootSystem& rs, const RootVec& root, size_t central_rank = 0);
Vec simple_weight(const RootSystem& rs, int i, size_t central_rank = 0);
// Simple-root coordinates of the semisimple part of a character.
QVec root_coords(const RootSystem& rs, const Vec& weight);
std::string weight_to_root_string(const RootSystem& rs, const Vec& weight);
// Index of the simple root with this weight, or -1.
int simple_index(const RootSystem& rs, const Vec& weight);

struct SphericalRootInfo {
  Vec weight;    // semisimple coordinates only
  QVec coords;   // simple-root coordinates
  int row = 0;   // catalog row, 1..14
  bool half = false;
  std::vector<int> support;
  std::vector<int> pp;       // Pi^pp(sigma)
  std::vector<int> p_sigma;  // Pi^p(sigma)
};

std::vector<SphericalRootInfo> spherical_roots_of(const RootSystem& rs);
std::optional<SphericalRootInfo> find_spherical_root(const RootSystem& rs, const Vec& weight);
// Throws std::invalid_argument if sigma is not a spherical root of G.
bool check_compatibility(const RootSystem& rs, const std::vector<int>& pi_p, const Vec& sigma);

struct HomogeneousSphericalDatum {
  RootSystem rs;
  size_t central_rank = 0;
  Sublattice lattice;        // Lambda inside X(T) = Z^{n + central_rank}
  std::vector<int> pi_p;     // sorted simple-root indices
  std::vector<Vec> sigma;    // characters in X(T) coordinates
  std::vector<Vec> colors;   // kappa(D) for D in D^a, values on lattice.basis()

  size_t ambient() const { return static_cast<size_t>(rs.rank()) + central_rank; }
  // kappa(D)(lambda); throws if lambda is outside Lambda.
  Int kappa(const Vec& functional, const Vec& lambda) const;
  Vec coroot_on_basis(int alpha) const;
};

struct SphericalSystem {
  RootSystem rs;
  std::vector<int> pi_p;
  std::vector<Vec> sigma;   // semisimple weights
  std::vector<Vec> colors;  // kappa(D)(sigma_j)

  // Lambda = Z Sigma.
  HomogeneousSphericalDatum datum() const;
  bool operator==(const SphericalSystem& o) const {
    return rs == o.rs && pi_p == o.pi_p && sigma == o.sigma && colors == o.colors;
  }
};

SphericalSystem make_system(const RootSystem& rs, const std::vector<RootVec>& sigma,
                            const std::vector<std::vector<long>>& kappa, std::vector<int> pi_p = {});
// Restriction of kappa to Z Sigma.
SphericalSystem system_of(const HomogeneousSphericalDatum& d);

// Sigma ordered by decreasing simple-root coordinates, colors sorted
// lexicographically. perm[new] = old color index.
SphericalSystem canonical(const SphericalSystem& s, std::vector<size_t>* perm = nullptr);

ValidationReport validate_hsd(const HomogeneousSphericalDatum& d);
ValidationReport validate_hsd(const SphericalSystem& s);

enum class ColorType { a, a_prime, b };

struct FullColor {
  ColorType type;
  Vec kappa;                // on the lattice basis
  std::vector<int> simple;  // alpha with D in D(alpha)
};

struct FullColorSet {
  std::vector<FullColor> colors;  // D^a first, in their given order
  std::vector<std::vector<size_t>> d_of;  // per simple root
  size_t count(ColorType t) const;
};

FullColorSet full_color_set(const HomogeneousSphericalDatum& d);
FullColorSet full_color_set(const SphericalSystem& s);

struct DistinguishedWitness {
  Vec coefficients;  // n_D > 0 for D in D'
  Vec delta;         // <delta, sigma_j>
};

// D' given as indices into the full color set.
std::optional<DistinguishedWitness> is_distinguished(const HomogeneousSphericalDatum& d,
                                                     const std::vector<size_t>& subset);
std::optional<DistinguishedWitness> is_distinguished(const SphericalSystem& s, const std::vector<size_t>& subset);

struct ColoredConeCheck {
  bool cc1 = false, cc2 = false, scc = false;
};
// Cone generated by kappa of `colors` and `valuations` (values on the lattice
// basis), against V = {q : <q, sigma> <= 0}.
ColoredConeCheck colored_cone_check(const HomogeneousSphericalDatum& d, const std::vector<size_t>& colors,
                                    const std::vector<Vec>& valuations);

SphericalSystem quotient_system(const SphericalSystem& s, const std::vector<size_t>& subset);

// Subsets D' of D^a (indices into s.colors) with |D \ D'| = |Pi| admitting
// delta with <delta, sigma> > 0 for all sigma.
std::vector<std::vector<size_t>> strong_solvability_witnesses(const HomogeneousSphericalDatum& d);
std::vector<std::vector<size_t>> strong_solvability_witnesses(const SphericalSystem& s);

SphericalSystem spherical_closure_invariants(const HomogeneousSphericalDatum& d);

}  // namespace spherica
