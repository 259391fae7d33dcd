#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "spherica/rootsys.hpp"

using namespace spherica;

namespace {

size_t classical_count(char t, int r) {
  switch (t) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("parse diagrams") {
  CHECK(DynkinDiagram::parse("A1xA1").components.size() == 2);
  CHECK(DynkinDiagram::parse("A1A1").name() == "A1xA1");
  CHECK(DynkinDiagram::parse("B3xG2").rank() == 5);
  CHECK_THROWS_AS(DynkinDiagram::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinDiagram::parse("E5"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinDiagram::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinDiagram::parse("H3"), std::invalid_argument);
}

TEST_CASE("small positive root sets") {
  RootSystem a2(DynkinDiagram::parse("A2"));
  CHECK(a2.positive_roots() == std::vector<RootVec>{{1, 0}, {0, 1}, {1, 1}});
  RootSystem b2(DynkinDiagram::parse("B2"));
  CHECK(b2.positive_roots() == std::vector<RootVec>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  RootSystem g2(DynkinDiagram::parse("G2"));
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.positive_roots().back() == RootVec{3, 2});
  CHECK(g2.is_positive_root({3, 1}));
  CHECK(g2.is_positive_root({2, 1}));
}

TEST_CASE("cartan conventions") {
  RootSystem a2(DynkinDiagram::parse("A2"));
  CHECK(a2.cartan(0, 1) == -1);
  RootSystem b2(DynkinDiagram::parse("B2"));
  CHECK(b2.cartan(1, 0) == -2);
  CHECK(b2.cartan(0, 1) == -1);
  RootSystem g2(DynkinDiagram::parse("G2"));
  CHECK(g2.cartan(0, 1) == -3);
  CHECK(g2.cartan(1, 0) == -1);
  RootSystem c3(DynkinDiagram::parse("C3"));
  CHECK(c3.cartan(1, 2) == -2);
  CHECK(c3.cartan(2, 1) == -1);
  RootSystem f4(DynkinDiagram::parse("F4"));
  CHECK(f4.cartan(1, 2) == -2);  // alpha_2 short, alpha_3 long
  CHECK(f4.is_positive_root({2, 2, 1, 1}));
  CHECK(f4.positive_roots().back() == RootVec{2, 4, 3, 2});
  RootSystem d4(DynkinDiagram::parse("D4"));
  CHECK(d4.cartan(1, 3) == -1);
  CHECK(d4.cartan(2, 3) == 0);
}

TEST_CASE("root attributes") {
  RootSystem g2(DynkinDiagram::parse("G2"));
  CHECK(RootSystem::height({3, 1}) == 4);
  RootSystem a3(DynkinDiagram::parse("A3"));
  CHECK(a3.support({1, 1, 0}) == std::vector<int>{0, 1});
  CHECK(a3.orthogonal({1, 0, 0}, {0, 0, 1}));
  CHECK_THROWS(a3.support({1, -1, 0}));
  // <alpha^vee, varpi_alpha> = 1: weight coordinates are pairings.
  auto w = a3.to_weight({1, 0, 0});
  CHECK(w == std::vector<int>{2, -1, 0});
}

TEST_CASE("root counts, closure and string properties for all types") {
  std::vector<std::string> names = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5",
                                    "E6", "E7", "E8", "F4", "G2", "A1xA1", "A2xB2"};
  for (const auto& nm : names) {
    CAPTURE(nm);
    RootSystem rs(DynkinDiagram::parse(nm));
    size_t expected = 0;
    for (const auto& c : rs.diagram().components) expected += classical_count(c.type, c.rank);
    CHECK(rs.positive_roots().size() == expected);
    int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int p = rs.cartan(i, j) * rs.cartan(j, i);
        CHECK((p >= 0 && p <= 3));
        CHECK(rs.inner_product()[i][j] == rs.inner_product()[j][i]);
      }
    for (const auto& g : rs.positive_roots()) {
      if (RootSystem::height(g) > 1) {
        bool found = false;
        for (int i = 0; i < n && !found; ++i) {
          RootVec d = g;
          d[i] -= 1;
          found = rs.is_positive_root(d);
        }
        CHECK(found);
      }
      // Weyl invariance of the form on roots: (g,g) is a component root length.
      int len = rs.inner(g, g);
      CHECK((len == 2 || len == 4 || len == 6));
    }
    for (const auto& g : rs.positive_roots())
      for (const auto& d : rs.positive_roots()) {
        RootVec s = g;
        for (int i = 0; i < n; ++i) s[i] += d[i];
        if (!rs.is_positive_root(s)) continue;
        auto sg = rs.support(g), sd = rs.support(d), ss = rs.support(s);
        std::set<int> u(sg.begin(), sg.end());
        u.insert(sd.begin(), sd.end());
        CHECK(std::vector<int>(u.begin(), u.end()) == ss);
      }
  }
}

TEST_CASE("subdiagram classification") {
  RootSystem a3(DynkinDiagram::parse("A3"));
  auto s = classify_subdiagram(a3, {0, 1, 2});
  CHECK(s.type == 'A');
  CHECK(s.orderings.size() == 2);
  CHECK(classify_subdiagram(a3, {0, 2}).type == '?');
  RootSystem b3(DynkinDiagram::parse("B3"));
  auto b = classify_subdiagram(b3, {1, 2});
  CHECK(b.type == 'B');
  CHECK(b.orderings == std::vector<std::vector<int>>{{1, 2}});
  RootSystem d4(DynkinDiagram::parse("D4"));
  CHECK(classify_subdiagram(d4, {0, 1, 2, 3}).orderings.size() == 6);
  RootSystem c3(DynkinDiagram::parse("C3"));
  CHECK(classify_subdiagram(c3, {0, 1, 2}).type == 'C');
  CHECK(classify_subdiagram(c3, {1, 2}).type == 'B');
}
