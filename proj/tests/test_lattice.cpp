#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "spherica/lattice.hpp"
#include "spherica/lp.hpp"

using namespace spherica;

namespace {

IntMatrix to_int(const oracle::Mat& m, size_t cols) {
  IntMatrix r(m.size(), cols);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < cols; ++j) r(i, j) = static_cast<long>(m[i][j]);
  return r;
}

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto s = smith(IntMatrix::from_ints({{2, 0}, {0, 3}}));
  CHECK(s.snf == IntMatrix::from_ints({{1, 0}, {0, 6}}));
  CHECK(smith(IntMatrix::identity(3)).snf == IntMatrix::identity(3));
  auto t = smith(IntMatrix::from_ints({{4, 6}, {6, 9}}));
  CHECK(t.snf == IntMatrix::from_ints({{1, 0}, {0, 0}}));
  CHECK(t.u * IntMatrix::from_ints({{4, 6}, {6, 9}}) * t.v == t.snf);
}

TEST_CASE("membership examples") {
  auto l = Sublattice::generated_by({v({1, -1})}, 2);
  CHECK(solve_membership(l, v({2, -2})) == Vec{2});
  CHECK(!solve_membership(l, v({1, 0})));
  auto m = Sublattice::generated_by({v({2, 0}), v({0, 3})}, 2);
  CHECK(solve_membership(m, v({2, 3})) == v({1, 1}));
}

TEST_CASE("finitely generated abelian groups") {
  FgAbelianGroup g(2, {v({2, 0}), v({0, 2})});
  CHECK(g.torsion() == std::vector<Int>{2, 2});
  CHECK(g.free_rank() == 0);
  CHECK(g.reduce(v({3, 1})) == v({1, 1}));
  FgAbelianGroup h(2, {v({1, -1})});
  CHECK(h.torsion().empty());
  CHECK(h.free_rank() == 1);
  Int sign = h.reduce(v({1, 0}))[0];
  CHECK((sign == 1 || sign == -1));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(h.reduce(v({a, b})) == Vec{sign * (a + b)});
  FgAbelianGroup k(3, {v({1, 1, 0}), v({0, 2, 2})});
  auto inv = oracle::invariant_factors({{1, 1, 0}, {0, 2, 2}});
  CHECK(inv == oracle::Row{1, 2});
  CHECK(k.torsion() == std::vector<Int>{2});
  CHECK(k.free_rank() == 1);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      Vec x = v({a, b, 1});
      CHECK(k.equal(k.lift(k.reduce(x)), x));
    }
}

TEST_CASE("random matrices against independent oracles") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int it = 0; it < 200; ++it) {
    size_t r = dim(rng), c = dim(rng);
    auto m = oracle::random_matrix(rng, r, c, -9, 9);
    IntMatrix im = to_int(m, c);
    auto nf = hnf_snf(im);
    auto s = smith(im);
    CHECK(s.u * im * s.v == s.snf);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    auto inv = oracle::invariant_factors(m);
    for (size_t i = 0; i < inv.size(); ++i) CHECK(s.snf(i, i) == Int(static_cast<long>(inv[i])));
    auto h = oracle::hnf(m);
    auto hr = hermite(im);
    CHECK(hr.rank == h.size());
    for (size_t i = 0; i < h.size(); ++i)
      for (size_t j = 0; j < c; ++j) CHECK(hr.hnf(i, j) == Int(static_cast<long>(h[i][j])));
    CHECK(hr.transform * im == hr.hnf);
    // idempotence
    CHECK(hermite(hr.hnf).hnf == hr.hnf);
    CHECK(smith(s.snf).snf == s.snf);
    (void)nf;
  }
}

TEST_CASE("membership against brute force") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 3), coef(-2, 2), amb(-4, 4);
  for (int it = 0; it < 60; ++it) {
    size_t n = dim(rng) + 1;
    auto gens = oracle::random_matrix(rng, dim(rng), n, -4, 4);
    std::vector<Vec> g;
    for (auto& row : gens) {
      Vec x;
      for (auto e : row) x.push_back(static_cast<long>(e));
      g.push_back(x);
    }
    auto l = Sublattice::generated_by(g, n);
    oracle::Mat basis;
    for (auto& b : l.basis()) {
      oracle::Row row;
      for (auto& e : b) row.push_back(e.get_si());
      basis.push_back(row);
    }
    for (int t = 0; t < 10; ++t) {
      oracle::Row target(n);
      for (auto& x : target) x = amb(rng);
      Vec tv;
      for (auto e : target) tv.push_back(static_cast<long>(e));
      auto hits = oracle::combos(basis, target, 3);
      auto sol = solve_membership(l, tv);
      if (!hits.empty()) {
        REQUIRE(sol);
        CHECK(sol->size() == hits[0].size());
        for (size_t i = 0; i < hits[0].size(); ++i) CHECK((*sol)[i] == Int(static_cast<long>(hits[0][i])));
      }
      if (sol) {
        Vec back = zero_vec(n);
        for (size_t i = 0; i < l.rank(); ++i) back = add(back, scale((*sol)[i], l.basis()[i]));
        CHECK(back == tv);
      }
    }
  }
}

TEST_CASE("sublattice operations") {
  auto a = Sublattice::generated_by({v({2, 0}), v({0, 1})}, 2);
  auto b = Sublattice::generated_by({v({1, 1})}, 2);
  CHECK((a + b) == Sublattice::full(2));
  auto i = a.intersect(b);
  CHECK(i == Sublattice::generated_by({v({2, 2})}, 2));
  CHECK(Sublattice::generated_by({v({2, 4})}, 2).saturation() == Sublattice::generated_by({v({1, 2})}, 2));
  auto k = left_kernel(IntMatrix::from_ints({{1, 2}, {2, 4}, {0, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(row_times(k[0], IntMatrix::from_ints({{1, 2}, {2, 4}, {0, 1}})) == v({0, 0}));
}

TEST_CASE("exact linear programming") {
  LinearProgram lp;
  auto x = lp.add_var(Rat(1));
  auto y = lp.add_var(Rat(1));
  lp.add(QVec{1, -1}, LinearProgram::Rel::GE, 1);
  lp.add(QVec{-1, 2}, LinearProgram::Rel::GE, 0);
  auto p = lp.feasible_point();
  REQUIRE(p);
  CHECK((*p)[x] - (*p)[y] >= 1);
  CHECK(-(*p)[x] + 2 * (*p)[y] >= 0);
  LinearProgram bad;
  bad.add_var(Rat(1));
  bad.add_var(Rat(1));
  bad.add(QVec{1, -1}, LinearProgram::Rel::GE, 0);
  bad.add(QVec{-1, 1}, LinearProgram::Rel::GE, 1);
  CHECK(!bad.feasible_point());
  LinearProgram fr;
  fr.add_var(std::nullopt);
  fr.add(QVec{2}, LinearProgram::Rel::EQ, -3);
  CHECK(fr.feasible_point() == QVec{Rat(-3, 2)});
  CHECK(clear_denominators(QVec{Rat(1, 2), Rat(2, 3)}) == v({3, 4}));
}
