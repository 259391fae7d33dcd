#pragma once

#include <stdexcept>
#include <vector>

#include "spherica/admissible.hpp"
#include "spherica/ars.hpp"
#include "spherica/luna.hpp"

namespace spherica {

struct RankBoundError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// 4, or the value of SPHERICA_RANK_BOUND when set.
int default_rank_bound();

struct EnumerateOptions {
  int rank_bound = default_rank_bound();
  bool parallel = false;
};

// All admissible maps, in a fixed order. With cuspidal_only the diagonal is
// all ones. Throws RankBoundError above the bound.
std::vector<AdmissibleMap> enumerate_admissible(const RootSystem& rs, bool cuspidal_only,
                                                const EnumerateOptions& opt = {});
// Admissible maps with Pi_eta = support: the cuspidal maps of that sub-diagram.
std::vector<AdmissibleMap> enumerate_admissible_on(const RootSystem& rs, const std::vector<int>& support,
                                                   const EnumerateOptions& opt = {});

struct DscRecord {
  std::vector<size_t> dsc;  // indices into the record's colors
  AdmissibleMap eta;
  std::vector<std::vector<RootVec>> classes;
};

struct ClassificationRecord {
  SphericalSystem system;  // canonical
  std::vector<DscRecord> dscs;
};

// Records sorted by decreasing color count, then decreasing DSC count.
std::vector<ClassificationRecord> enumerate_cuspidal_systems(const RootSystem& rs, const EnumerateOptions& opt = {});
// All strongly solvable spherical systems: cuspidal ones of every
// sub-diagram, embedded. Sorted by Sigma, then as above.
std::vector<ClassificationRecord> enumerate_systems(const RootSystem& rs, const EnumerateOptions& opt = {});

}  // namespace spherica
