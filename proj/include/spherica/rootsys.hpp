#pragma once

#include <set>
#include <string>
#include <vector>

namespace spherica {

// Coordinates of an element of the root lattice in the basis of simple roots.
using RootVec = std::vector<int>;

struct Component {
  char type;
  int rank;
  bool operator==(const Component&) const = default;
};

struct DynkinDiagram {
  std::vector<Component> components;

  int rank() const;
  std::string name() const;
  // Accepts "A2", "A1xA1", "A1A1", "B3xG2", ...
  static DynkinDiagram parse(const std::string& text);
  // Throws std::invalid_argument naming the offending component.
  void check() const;
  bool operator==(const DynkinDiagram&) const = default;
};

// Squared lengths and bonds of one simple component. Node numbering follows
// Bourbaki except F4, where the short roots come first (alpha_1, alpha_2).
struct ComponentShape {
  std::vector<int> sq_length;
  std::vector<std::pair<int, int>> edges;
};
ComponentShape component_shape(char type, int rank);
std::vector<std::vector<int>> component_cartan(char type, int rank);

class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(DynkinDiagram d);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return n_; }
  // <alpha_i^vee, alpha_j>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // (alpha_i, alpha_j); short roots of each component have squared length 2.
  const std::vector<std::vector<int>>& inner_product() const { return gram_; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }

  RootVec simple(int i) const;
  bool is_positive_root(const RootVec& v) const { return positive_set_.count(v) > 0; }
  bool is_root(const RootVec& v) const;

  // <alpha_i^vee, beta> for beta in the root lattice.
  int pairing(int i, const RootVec& beta) const;
  // Fundamental-weight coordinates of a root-lattice element.
  std::vector<int> to_weight(const RootVec& beta) const;
  int inner(const RootVec& a, const RootVec& b) const;
  bool orthogonal(const RootVec& a, const RootVec& b) const { return inner(a, b) == 0; }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  std::vector<int> support(const RootVec& v) const;
  static int height(const RootVec& v);

  bool operator==(const RootSystem& o) const { return diagram_ == o.diagram_; }

 private:
  DynkinDiagram diagram_;
  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVec> positive_;
  std::set<RootVec> positive_set_;
};

// Identification of a connected set of nodes with a simple type.
// orderings[k][i] is the node playing the role of alpha_{i+1}; all diagram
// automorphisms of the type are listed.
struct SubdiagramShape {
  char type = '?';
  int rank = 0;
  std::vector<std::vector<int>> orderings;
};
bool is_connected(const RootSystem& rs, const std::vector<int>& nodes);
SubdiagramShape classify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes);

// Root obtained by summing the simple roots of `nodes`.
RootVec indicator(int n, const std::vector<int>& nodes);
std::string root_to_string(const RootVec& v);

}  // namespace spherica
