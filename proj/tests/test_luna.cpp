#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "golden.hpp"
#include "spherica/luna.hpp"

using namespace spherica;

namespace {

RootSystem rs_of(const std::string& t) { return RootSystem(DynkinDiagram::parse(t)); }

SphericalSystem cuspidal(const RootSystem& rs, const std::vector<std::vector<long>>& rows) {
  std::vector<RootVec> sigma;
  for (int i = 0; i < rs.rank(); ++i) sigma.push_back(rs.simple(i));
  return make_system(rs, sigma, rows);
}

SphericalSystem golden_system(const golden::System& g) { return cuspidal(rs_of(g.type), g.rows); }

std::set<std::vector<size_t>> zero_based(const std::vector<golden::Dsc>& ds) {
  std::set<std::vector<size_t>> out;
  for (const auto& d : ds) {
    std::vector<size_t> r;
    for (size_t x : d.rows) r.push_back(x - 1);
    out.insert(r);
  }
  return out;
}

bool has_root(const RootSystem& rs, const RootVec& r, std::vector<int> pp = {}, int* row = nullptr) {
  auto info = find_spherical_root(rs, weight_of(rs, r));
  if (!info) return false;
  if (row) *row = info->row;
  return info->pp == pp;
}

}  // namespace

TEST_CASE("catalog of spherical roots") {
  auto a1 = rs_of("A1");
  auto cat = spherical_roots_of(a1);
  REQUIRE(cat.size() == 2);
  CHECK(has_root(a1, {1}));
  CHECK(has_root(a1, {2}));

  auto a1a1 = rs_of("A1xA1");
  int row = 0;
  CHECK(has_root(a1a1, {1, 1}, {}, &row));
  CHECK(row == 3);

  auto g2 = rs_of("G2");
  CHECK(has_root(g2, {1, 1}, {}));
  CHECK(has_root(g2, {2, 1}, {1}));
  CHECK(has_root(g2, {4, 2}, {1}));

  auto b3 = rs_of("B3");
  CHECK(has_root(b3, {1, 1, 1}, {1}));  // alpha_r dropped
  CHECK(has_root(b3, {2, 2, 2}, {1, 2}));
  auto c3 = rs_of("C3");
  CHECK(has_root(c3, {1, 2, 1}, {2}));  // alpha_1 dropped
  auto d4 = rs_of("D4");
  CHECK(has_root(d4, {2, 2, 1, 1}, {1, 2, 3}));
  auto f4 = rs_of("F4");
  CHECK(has_root(f4, {2, 3, 2, 1}, {1, 2, 3}));

  // Half roots are kept only when integral on the weight lattice.
  auto a3 = rs_of("A3");
  Vec half = {0, 1, 0};
  auto h = find_spherical_root(a3, half);
  REQUIRE(h);
  CHECK(h->half);
  CHECK(h->row == 5);
  CHECK(!find_spherical_root(a1a1, Vec{1, 0}));
  CHECK(find_spherical_root(a1a1, Vec{1, 1}));

  // Nothing outside the catalog.
  CHECK(find_spherical_root(a3, weight_of(a3, {1, 1, 0})));
  CHECK(find_spherical_root(a3, weight_of(a3, {1, 0, 1})));
  CHECK(!find_spherical_root(rs_of("A2"), weight_of(rs_of("A2"), {2, 1})));
}

TEST_CASE("compatibility") {
  auto a1 = rs_of("A1");
  CHECK(check_compatibility(a1, {}, weight_of(a1, {1})));
  auto a3 = rs_of("A3");
  Vec s = weight_of(a3, {1, 2, 1});
  CHECK(!check_compatibility(a3, {0}, s));
  CHECK(check_compatibility(a3, {0, 2}, s));
  auto info = find_spherical_root(a3, s);
  CHECK(check_compatibility(a3, info->p_sigma, s));
  CHECK_THROWS_AS(check_compatibility(a3, {}, weight_of(a3, {2, 1, 0})), std::invalid_argument);
}

TEST_CASE("golden systems satisfy every axiom") {
  for (const auto& g : golden::systems()) {
    auto s = golden_system(g);
    auto rep = validate_hsd(s);
    INFO(g.type << " #" << g.number << "\n" << rep.text());
    CHECK(rep.ok());
    // Sum law per simple root.
    auto fc = full_color_set(s);
    CHECK(fc.colors.size() == g.rows.size());
    for (int a = 0; a < s.rs.rank(); ++a) {
      REQUIRE(fc.d_of[a].size() == 2);
      for (int b = 0; b < s.rs.rank(); ++b)
        CHECK(s.colors[fc.d_of[a][0]][b] + s.colors[fc.d_of[a][1]][b] == s.rs.cartan(a, b));
    }
  }
}

TEST_CASE("A1xA1 rows (1,0),(0,1),(1,1) break the sum axiom") {
  auto s = cuspidal(rs_of("A1xA1"), {{1, 0}, {0, 1}, {1, 1}});
  auto rep = validate_hsd(s);
  CHECK(!rep.passed("A2"));
}

TEST_CASE("mutations are caught with witnesses") {
  auto s = cuspidal(rs_of("A2"), {{2, 0}, {0, 1}, {1, -1}, {-1, 1}});
  auto rep = validate_hsd(s);
  CHECK(!rep.passed("A1"));
  for (const auto& r : rep.results())
    if (r.axiom == "A1") CHECK(!r.witnesses.empty());

  // A color meeting no D(alpha).
  auto t = cuspidal(rs_of("A2"), {{1, 0}, {0, 1}, {1, -1}, {-1, 1}, {0, 0}});
  CHECK(!validate_hsd(t).passed("A3"));

  // Non-simple sigma with value 1.
  auto a2 = rs_of("A2");
  auto u = make_system(a2, {{1, 1}}, {{1}});
  CHECK(!validate_hsd(u).passed("A1"));
}

TEST_CASE("small systems") {
  auto a1 = rs_of("A1");
  SphericalSystem gb{a1, {}, {}, {}};
  CHECK(validate_hsd(gb).ok());
  auto w = strong_solvability_witnesses(gb);
  REQUIRE(w.size() == 1);
  CHECK(w[0].empty());

  // SL2 / N(T): Sigma = {2 alpha}, one a' color.
  auto n = make_system(a1, {{2}}, {});
  CHECK(validate_hsd(n).ok());
  auto fc = full_color_set(n);
  CHECK(fc.count(ColorType::a_prime) == 1);
  CHECK(fc.colors[0].kappa == Vec{2});
  CHECK(strong_solvability_witnesses(n).empty());

  // A2 with Sigma = {alpha1 + alpha2}: two b colors.
  auto a2 = rs_of("A2");
  auto gl = make_system(a2, {{1, 1}}, {});
  CHECK(validate_hsd(gl).ok());
  CHECK(full_color_set(gl).count(ColorType::b) == 2);

  // Sigma = {2 alpha} violates Sigma1 when an adjacent sigma pairs positively.
  auto bad = make_system(a2, {{2, 0}, {0, 1}}, {{0}, {0}});
  CHECK(!validate_hsd(bad).ok());

  // Pi^p must kill Lambda.
  auto sp = make_system(a2, {{1, 0}}, {{1}, {1}}, {1});
  auto rep = validate_hsd(sp);
  CHECK(!rep.passed("S"));
}

TEST_CASE("full color sets") {
  auto a2 = rs_of("A2");
  SphericalSystem gb{a2, {}, {}, {}};
  auto fc = full_color_set(gb);
  CHECK(fc.colors.size() == 2);
  CHECK(fc.count(ColorType::b) == 2);
  CHECK(fc.d_of[0] == std::vector<size_t>{0});
  CHECK(fc.d_of[1] == std::vector<size_t>{1});

  auto t4 = golden_system(*golden::of_type("A2")[0]);
  auto f4 = full_color_set(t4);
  CHECK(f4.colors.size() == 4);
  CHECK(f4.d_of[0] == std::vector<size_t>{0, 2});
  CHECK(f4.d_of[1] == std::vector<size_t>{1, 3});

  auto a1a1 = rs_of("A1xA1");
  auto s = make_system(a1a1, {{1, 1}}, {});
  CHECK(validate_hsd(s).ok());
  auto fb = full_color_set(s);
  REQUIRE(fb.colors.size() == 1);
  CHECK(fb.colors[0].type == ColorType::b);
  CHECK(fb.colors[0].simple == std::vector<int>{0, 1});

  // |D| = |D^a| + |Pi^a'| + |Pi^b / ~| counted independently.
  auto a3 = rs_of("A3");
  auto m = make_system(a3, {{2, 0, 0}}, {});
  CHECK(validate_hsd(m).ok());
  auto fm = full_color_set(m);
  CHECK(fm.colors.size() == 0 + 1 + 2);
}

TEST_CASE("distinguished subsets") {
  auto t4 = golden_system(*golden::of_type("A2")[0]);
  auto e = is_distinguished(t4, {});
  REQUIRE(e);
  CHECK(is_zero(e->delta));
  auto w = is_distinguished(t4, {0, 1});
  REQUIRE(w);
  CHECK(w->delta[0] > 0);
  CHECK(w->delta[1] > 0);
  CHECK(!is_distinguished(t4, {2}));
  auto both = is_distinguished(t4, {2, 3});
  REQUIRE(both);
  CHECK(both->coefficients[0] == both->coefficients[1]);
}

TEST_CASE("strong solvability witnesses match the DSC columns") {
  for (const auto& g : golden::systems()) {
    auto s = golden_system(g);
    auto ws = strong_solvability_witnesses(s);
    std::set<std::vector<size_t>> got(ws.begin(), ws.end());
    INFO(g.type << " #" << g.number);
    CHECK(got == zero_based(g.dsc));
    for (const auto& d : ws) {
      REQUIRE(is_distinguished(s, d));
      auto q = quotient_system(s, d);
      CHECK(q.sigma.empty());
      CHECK(q.pi_p.empty());
      CHECK(q.colors.empty());
    }
  }
}

TEST_CASE("quotients") {
  auto t4 = golden_system(*golden::of_type("A2")[0]);
  auto id = quotient_system(t4, {});
  CHECK(canonical(id) == canonical(t4));
  CHECK_THROWS_AS(quotient_system(t4, {2}), std::invalid_argument);

  auto t3 = golden_system(*golden::of_type("A1xA1")[1]);
  auto q = quotient_system(t3, {2});
  CHECK(q.sigma.empty());

  // D' = {D3, D4} kills alpha1 + alpha2 only: Sigma/D' = {alpha1 + alpha2}.
  auto q2 = quotient_system(t4, {2, 3});
  REQUIRE(q2.sigma.size() == 1);
  CHECK(root_coords(t4.rs, q2.sigma[0]) == QVec{1, 1});
  CHECK(q2.colors.empty());
  CHECK(validate_hsd(q2).ok());

  // Quotient by the b color of the A1xA1 system with Sigma = {alpha1 + alpha2}
  // is G/G.
  auto a1a1 = rs_of("A1xA1");
  auto s = make_system(a1a1, {{1, 1}}, {});
  auto q3 = quotient_system(s, {0});
  CHECK(q3.sigma.empty());
  CHECK(q3.pi_p == std::vector<int>{0, 1});
}

TEST_CASE("colored cone helper") {
  auto d = golden_system(*golden::of_type("A2")[0]).datum();
  auto c = colored_cone_check(d, {0, 1}, {});
  CHECK(c.cc1);
  CHECK(!c.cc2);
  CHECK(c.scc);
  auto c2 = colored_cone_check(d, {2, 3}, {});
  CHECK(c2.cc2);
  CHECK(!c2.scc);
  // A valuation outside V breaks CC1.
  Vec inside = zero_vec(d.lattice.rank());
  auto c3 = colored_cone_check(d, {}, {d.colors[0]});
  CHECK(!c3.cc1);
  auto c4 = colored_cone_check(d, {}, {inside});
  CHECK(c4.cc1);
}

TEST_CASE("datum and system conversions") {
  for (const auto& g : golden::systems()) {
    auto s = golden_system(g);
    auto d = s.datum();
    CHECK(validate_hsd(d).ok());
    CHECK(system_of(d) == s);
  }
  auto s = golden_system(*golden::of_type("A3")[0]);
  std::vector<size_t> perm;
  auto c = canonical(s, &perm);
  CHECK(std::is_sorted(c.colors.begin(), c.colors.end()));
  for (size_t i = 0; i < perm.size(); ++i) CHECK(c.colors[i] == s.colors[perm[i]]);
  CHECK(canonical(c) == c);
}

TEST_CASE("spherical closure") {
  for (const auto& g : golden::systems()) {
    auto s = golden_system(g);
    auto cl = spherical_closure_invariants(s.datum());
    CHECK(cl == s);
  }
  // Sigma = {(alpha1 + alpha2) / 2} on A1xA1 closes up to alpha1 + alpha2.
  auto rs = rs_of("A1xA1");
  HomogeneousSphericalDatum d;
  d.rs = rs;
  d.lattice = Sublattice::generated_by({Vec{1, 1}}, 2);
  d.sigma = {Vec{1, 1}};
  CHECK(validate_hsd(d).ok());
  auto cl = spherical_closure_invariants(d);
  REQUIRE(cl.sigma.size() == 1);
  CHECK(cl.sigma[0] == Vec{2, 2});
  CHECK(spherical_closure_invariants(cl.datum()) == cl);

  // Simple roots are never doubled.
  auto a1 = rs_of("A1");
  HomogeneousSphericalDatum e;
  e.rs = a1;
  e.lattice = Sublattice::generated_by({Vec{2}}, 1);
  e.sigma = {Vec{2}};
  e.colors = {Vec{1}, Vec{1}};
  CHECK(validate_hsd(e).ok());
  CHECK(spherical_closure_invariants(e).sigma[0] == Vec{2});
}

TEST_CASE("central torus and lattices finer than Z Sigma") {
  // T x SL2 / ... : Lambda = Z(alpha) + Z(central), one spherical root.
  auto a1 = rs_of("A1");
  HomogeneousSphericalDatum d;
  d.rs = a1;
  d.central_rank = 1;
  d.lattice = Sublattice::generated_by({Vec{2, 0}, Vec{0, 1}}, 2);
  d.sigma = {Vec{2, 0}};
  d.colors = {Vec{1, 0}, Vec{1, 0}};
  CHECK(validate_hsd(d).ok());
  d.colors = {Vec{1, 1}, Vec{1, -1}};
  CHECK(validate_hsd(d).ok());
  d.colors = {Vec{1, 1}, Vec{1, 0}};
  CHECK(!validate_hsd(d).passed("A2"));
  // Sigma must be primitive in Lambda.
  d.lattice = Sublattice::generated_by({Vec{1, 0}, Vec{0, 1}}, 2);
  d.colors = {Vec{1, 0}, Vec{1, 0}};
  CHECK(!validate_hsd(d).passed("structure"));
}
