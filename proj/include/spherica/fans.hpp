#pragma once

#include <optional>
#include <vector>

#include "spherica/lattice.hpp"

namespace spherica {

class Cone {
 public:
  Cone() = default;
  // Generators are made primitive and deduplicated (order of first appearance).
  Cone(size_t ambient, const std::vector<Vec>& generators);

  size_t ambient() const { return n_; }
  const std::vector<Vec>& generators() const { return gens_; }
  size_t dim() const;
  bool contains(const Vec& point) const;

 private:
  size_t n_ = 0;
  std::vector<Vec> gens_;
};

struct ConeReport {
  bool strictly_convex = false;
  bool simplicial = false;
  bool regular = false;
  // Each face as the sorted indices of the generators it contains.
  std::vector<std::vector<size_t>> faces;
};

ConeReport validate_cone(const Cone& c);
// Generators not redundant in c.
std::vector<Vec> extremal_rays(const Cone& c);
// Requires a full-dimensional strictly convex cone.
Cone dual_cone(const Cone& c);
// Faces of codimension one, as generator index sets.
std::vector<std::vector<size_t>> facets(const Cone& c);

class Fan {
 public:
  Fan() = default;
  Fan(size_t ambient, std::vector<Cone> maximal) : n_(ambient), cones_(std::move(maximal)) {}
  size_t ambient() const { return n_; }
  const std::vector<Cone>& maximal_cones() const { return cones_; }
  std::vector<Vec> rays() const;

 private:
  size_t n_ = 0;
  std::vector<Cone> cones_;
};

struct FanReport {
  bool is_fan = false;
  bool complete = false;
  bool regular = false;
  std::vector<Vec> rays;
  std::optional<Vec> witness;  // point in two cones outside their common face
};

FanReport validate_fan(const Fan& f);

struct FanRootWitness {
  Vec alpha;
  Vec ray;
};

std::optional<FanRootWitness> fan_root_check(const Fan& f, const Vec& alpha);

}  // namespace spherica
