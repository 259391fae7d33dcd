#pragma once

// Cuspidal strongly solvable spherical systems of rank <= 3 (Sigma = Pi,
// Pi^p empty). Color rows are <kappa(D), alpha_i>; DSC rows are 1-based.

#include <string>
#include <vector>

#include "spherica/rootsys.hpp"

namespace golden {

using spherica::RootVec;

struct Dsc {
  std::vector<size_t> rows;
  std::vector<std::vector<long>> eta;
  std::vector<std::vector<RootVec>> classes;
};

struct System {
  std::string type;
  int number;
  std::vector<std::vector<long>> rows;
  std::vector<Dsc> dsc;
};

inline std::vector<Dsc> same(std::vector<std::vector<size_t>> alternatives, std::vector<std::vector<long>> eta,
                             std::vector<std::vector<RootVec>> classes) {
  std::vector<Dsc> out;
  for (auto& r : alternatives) out.push_back({r, eta, classes});
  return out;
}

inline const std::vector<System>& systems() {
  static const std::vector<System> all = {
      {"A1", 1, {{1}, {1}}, same({{1}, {2}}, {{1}}, {{{1}}})},

      {"A1xA1", 1, {{1, 0}, {1, 0}, {0, 1}, {0, 1}},
       same({{1, 3}, {1, 4}, {2, 3}, {2, 4}}, {{1, 0}, {0, 1}}, {{{1, 0}}, {{0, 1}}})},
      // The rows (1,0),(0,1),(1,1) violate the sum axiom. These rows are
      // forced by the admissible map [[1,1],[1,1]].
      {"A1xA1", 2, {{1, -1}, {-1, 1}, {1, 1}}, {{{3}, {{1, 1}, {1, 1}}, {{{1, 0}, {0, 1}}}}}},

      {"A2", 1, {{1, 0}, {0, 1}, {1, -1}, {-1, 1}},
       {{{1, 2}, {{1, 0}, {0, 1}}, {{{1, 0}}, {{0, 1}}}},
        {{1, 4}, {{1, 0}, {-1, 1}}, {{{1, 1}}, {{0, 1}}}},
        {{2, 3}, {{1, -1}, {0, 1}}, {{{1, 0}}, {{1, 1}}}}}},
      {"A2", 2, {{1, 1}, {1, -2}, {-2, 1}}, {{{1}, {{1, 1}, {1, 1}}, {{{1, 0}, {0, 1}}}}}},

      {"B2", 1, {{1, 0}, {0, 1}, {1, -1}, {-2, 1}},
       {{{1, 2}, {{1, 0}, {0, 1}}, {{{1, 0}}, {{0, 1}}}},
        {{1, 4}, {{1, 0}, {-2, 1}}, {{{1, 2}}, {{0, 1}}}},
        {{2, 3}, {{1, -1}, {0, 1}}, {{{1, 0}}, {{1, 1}}}}}},
      {"B2", 2, {{1, 0}, {-1, 1}, {1, -1}, {-1, 1}}, same({{1, 2}, {1, 4}}, {{1, 0}, {-1, 1}}, {{{1, 1}}, {{0, 1}}})},
      {"B2", 3, {{1, 1}, {1, -2}, {-3, 1}}, {{{1}, {{1, 1}, {1, 1}}, {{{1, 0}, {0, 1}}}}}},

      {"G2", 1, {{1, 0}, {0, 1}, {1, -3}, {-1, 1}},
       {{{1, 2}, {{1, 0}, {0, 1}}, {{{1, 0}}, {{0, 1}}}},
        {{1, 4}, {{1, 0}, {-1, 1}}, {{{1, 1}}, {{0, 1}}}},
        {{2, 3}, {{1, -3}, {0, 1}}, {{{1, 0}}, {{3, 1}}}}}},
      {"G2", 2, {{1, -1}, {0, 1}, {1, -2}, {-1, 1}},
       {{{1, 2}, {{1, -1}, {0, 1}}, {{{1, 0}}, {{1, 1}}}},
        {{2, 3}, {{1, -2}, {0, 1}}, {{{1, 0}}, {{2, 1}}}}}},
      {"G2", 3, {{1, 1}, {1, -4}, {-2, 1}}, {{{1}, {{1, 1}, {1, 1}}, {{{1, 0}, {0, 1}}}}}},

      {"A3", 1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {-1, 1, -1}, {0, -1, 1}},
       {{{1, 2, 3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}}},
        {{1, 2, 6}, {{1, 0, 0}, {0, 1, 0}, {0, -1, 1}}, {{{1, 0, 0}}, {{0, 1, 1}}, {{0, 0, 1}}}},
        {{1, 3, 5}, {{1, 0, 0}, {-1, 1, -1}, {0, 0, 1}}, {{{1, 1, 0}}, {{0, 1, 0}}, {{0, 1, 1}}}},
        {{2, 3, 4}, {{1, -1, 0}, {0, 1, 0}, {0, 0, 1}}, {{{1, 0, 0}}, {{1, 1, 0}}, {{0, 0, 1}}}},
        {{2, 4, 6}, {{1, -1, 0}, {0, 1, 0}, {0, -1, 1}}, {{{1, 0, 0}}, {{1, 1, 1}}, {{0, 0, 1}}}}}},
      {"A3", 2, {{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}, {1, -1, 0}, {0, 1, -1}, {0, 0, 1}},
       {{{1, 2, 3}, {{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}}, {{{1, 1, 1}}, {{0, 1, 1}}, {{0, 0, 1}}}},
        {{1, 2, 6}, {{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}}, {{{1, 1, 0}}, {{0, 1, 0}}, {{0, 0, 1}}}},
        {{1, 5, 6}, {{1, 0, 0}, {0, 1, -1}, {0, 0, 1}}, {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 1, 1}}}},
        {{4, 5, 6}, {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}, {{{1, 0, 0}}, {{1, 1, 0}}, {{1, 1, 1}}}}}},
      {"A3", 3, {{1, 0, 0}, {0, 1, 1}, {1, -1, 0}, {-1, 1, -2}, {0, -2, 1}},
       {{{1, 2}, {{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}, {{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}}},
        {{2, 3}, {{1, -1, 0}, {0, 1, 1}, {0, 1, 1}}, {{{1, 0, 0}}, {{1, 1, 0}, {0, 0, 1}}}}}},
      {"A3", 4, {{1, 0, 1}, {0, 1, 0}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
       {{{1, 2}, {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}, {{{1, 0, 0}, {0, 0, 1}}, {{0, 1, 0}}}},
        {{1, 4}, {{1, 0, 1}, {-1, 1, -1}, {1, 0, 1}}, {{{1, 1, 0}, {0, 1, 1}}, {{0, 1, 0}}}}}},
      {"A3", 5, {{1, 1, 0}, {0, 0, 1}, {1, -2, 0}, {-2, 1, -1}, {0, -1, 1}},
       {{{1, 2}, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}, {{{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}}}},
        {{1, 5}, {{1, 1, 0}, {1, 1, 0}, {0, -1, 1}}, {{{1, 0, 0}, {0, 1, 1}}, {{0, 0, 1}}}}}},
      {"A3", 6, {{1, 0, 1}, {-1, 1, 0}, {1, -1, -1}, {0, 1, -1}, {-1, -1, 1}},
       {{{1, 2}, {{1, 0, 1}, {-1, 1, 0}, {1, 0, 1}}, {{{1, 1, 0}, {0, 0, 1}}, {{0, 1, 0}}}},
        {{1, 4}, {{1, 0, 1}, {0, 1, -1}, {1, 0, 1}}, {{{1, 0, 0}, {0, 1, 1}}, {{0, 1, 0}}}}}},
      {"A3", 7, {{1, -1, 1}, {0, 1, 0}, {1, 0, -1}, {-1, 1, -1}, {-1, 0, 1}},
       {{{1, 2}, {{1, -1, 1}, {0, 1, 0}, {1, -1, 1}}, {{{1, 0, 0}, {0, 0, 1}}, {{1, 1, 0}, {0, 1, 1}}}}}},
      {"A3", 8, {{1, 1, 1}, {1, -2, -1}, {-2, 1, -2}, {-1, -2, 1}},
       {{{1}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}}},
  };
  return all;
}

inline std::vector<const System*> of_type(const std::string& type) {
  std::vector<const System*> out;
  for (const auto& s : systems())
    if (s.type == type) out.push_back(&s);
  return out;
}

}  // namespace golden
