#include "spherica/ars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spherica {

namespace {

std::string rname(const RootVec& v) { return root_to_string(v); }
std::string sname(int a) { return "α" + std::to_string(a + 1); }

bool contains(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

RootVec minus(const RootVec& a, const RootVec& b) {
  RootVec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

RootVec plus(const RootVec& a, const RootVec& b) {
  RootVec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] + b[i];
  return d;
}

bool is_zero_root(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool higher(const RootVec& a, const RootVec& b) {
  int ha = RootSystem::height(a), hb = RootSystem::height(b);
  return ha != hb ? ha > hb : a > b;
}

struct UnionFind {
  std::vector<size_t> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), size_t(0)); }
  size_t find(size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(size_t a, size_t b) { p[find(a)] = find(b); }
};

// Nodes of a simply-laced path in order, or empty.
std::vector<int> path_order(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.size() == 1) return nodes;
  std::map<int, std::vector<int>> adj;
  size_t edges = 0;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      int u = nodes[i], v = nodes[j];
      if (!rs.adjacent(u, v)) continue;
      if (rs.cartan(u, v) != -1 || rs.cartan(v, u) != -1) return {};
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++edges;
    }
  if (edges + 1 != nodes.size()) return {};
  int start = -1;
  for (int u : nodes) {
    if (adj[u].size() > 2) return {};
    if (adj[u].size() == 1 && start < 0) start = u;
  }
  if (start < 0) return {};
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (out.size() < nodes.size()) {
    int next = -1;
    for (int v : adj[cur])
      if (v != prev) next = v;
    if (next < 0) return {};
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

bool unit_coefficients(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0 || x == 1; });
}

// Orients `path` so that the nodes of `tail` form its end; returns the first
// node of the tail, or -1 if the tail is not an end segment.
int tail_start(std::vector<int> path, const std::vector<int>& tail) {
  auto in_tail = [&](int x) { return contains(tail, x); };
  size_t k = tail.size();
  if (k == 0 || k >= path.size()) return -1;
  if (!std::all_of(path.end() - k, path.end(), in_tail)) std::reverse(path.begin(), path.end());
  if (!std::all_of(path.end() - k, path.end(), in_tail)) return -1;
  return path[path.size() - k];
}

// The star pattern: Supp a and Supp b are paths sharing an end segment I of
// length >= 2 and meeting nowhere else, with no bonds between the rest.
bool star_pattern(const RootSystem& rs, const RootVec& a, const RootVec& b, std::vector<int>* inter) {
  if (!unit_coefficients(a) || !unit_coefficients(b)) return false;
  auto sa = rs.support(a), sb = rs.support(b);
  std::vector<int> i_set, a_only, b_only;
  for (int x : sa) (contains(sb, x) ? i_set : a_only).push_back(x);
  for (int x : sb)
    if (!contains(sa, x)) b_only.push_back(x);
  if (i_set.size() < 2 || a_only.empty() || b_only.empty()) return false;
  auto pa = path_order(rs, sa), pb = path_order(rs, sb);
  if (pa.empty() || pb.empty()) return false;
  int g0 = tail_start(pa, i_set);
  if (g0 < 0 || g0 != tail_start(pb, i_set)) return false;
  for (int x : a_only)
    for (int y : b_only)
      if (rs.adjacent(x, y)) return false;
  *inter = i_set;
  return true;
}

std::vector<int> intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (contains(b, x)) out.push_back(x);
  return out;
}

struct PairConditions {
  bool d0 = false, d1 = false, e1 = false, d2 = false, e2 = false;
};

PairConditions pair_conditions(const RootSystem& rs, const RootVec& a, int pa, const RootVec& b, int pb) {
  PairConditions c;
  auto inter = intersection(rs.support(a), rs.support(b));
  c.d0 = inter.empty();
  if (inter.size() == 1) {
    int d = inter[0];
    bool term = is_terminal(rs, a, d) && is_terminal(rs, b, d);
    c.d1 = term && pa != d && pb != d;
    RootVec e = rs.simple(d);
    c.e1 = term && pa == d && pb == d && rs.is_positive_root(minus(a, e)) && rs.is_positive_root(minus(b, e));
  }
  std::vector<int> star;
  if (star_pattern(rs, a, b, &star)) {
    c.d2 = !contains(star, pa) && !contains(star, pb);
    c.e2 = pa == pb && contains(star, pa);
  }
  return c;
}

Vec weight_of_root(const RootSystem& rs, const RootVec& r, size_t c) { return weight_of(rs, r, c); }

Sublattice simple_lattice(const RootSystem& rs, const std::vector<int>& nodes, size_t c) {
  std::vector<Vec> gens;
  for (int a : nodes) gens.push_back(simple_weight(rs, a, c));
  return Sublattice::generated_by(gens, rs.rank() + c);
}

// Solves tau(mu) = sum J(phi) phi against fixed class representatives.
struct TauSolver {
  std::vector<Vec> rows;
  size_t classes = 0;
  size_t ambient = 0;
  bool independent = true;

  TauSolver(const ExtendedARSSet& e, const ActiveRootSystem& ars) {
    ambient = e.ars.rs.rank() + e.central_rank;
    classes = ars.phi_count;
    std::vector<Vec> reps(classes);
    for (size_t i = 0; i < ars.psi.size(); ++i)
      if (reps[ars.phi[i]].empty()) reps[ars.phi[i]] = weight_of_root(ars.rs, ars.psi[i], e.central_rank);
    rows = reps;
    for (const auto& k : e.ker_tau.basis()) rows.push_back(k);
    if (!rows.empty())
      for (const auto& y : left_kernel(IntMatrix::from_rows(rows, ambient)))
        for (size_t i = 0; i < classes; ++i)
          if (y[i] != 0) independent = false;
  }

  std::vector<Int> operator()(const Vec& mu) const {
    if (!independent) throw std::invalid_argument("classes are dependent modulo Ker tau");
    if (rows.empty()) {
      if (!is_zero(mu)) throw std::invalid_argument("weight outside Z Pi_0 + Ker tau");
      return {};
    }
    auto x = solve_left(rows, mu, ambient);
    if (!x) throw std::invalid_argument("weight " + vec_to_string(mu) + " outside Z Pi_0 + Ker tau");
    return std::vector<Int>(x->begin(), x->begin() + classes);
  }
};

ActiveRootSystem assemble(const RootSystem& rs, std::vector<RootVec> psi, std::vector<size_t> phi, size_t count) {
  ActiveRootSystem out;
  out.rs = rs;
  out.psi = std::move(psi);
  out.phi = std::move(phi);
  out.phi_count = count;
  out.pi = derive_pi(rs, out.psi);
  return out;
}

}  // namespace

bool is_terminal(const RootSystem& rs, const RootVec& alpha, int delta) {
  auto s = rs.support(alpha);
  if (!contains(s, delta)) return false;
  int deg = 0;
  for (int x : s)
    if (rs.adjacent(x, delta)) ++deg;
  return deg == 1;
}

bool check_active_pattern(const RootSystem& rs, const RootVec& alpha, int delta) {
  if (!rs.is_positive_root(alpha)) throw std::invalid_argument(rname(alpha) + " is not a positive root");
  auto supp = rs.support(alpha);
  if (!contains(supp, delta)) throw std::invalid_argument(sname(delta) + " is not in the support of " + rname(alpha));
  if (unit_coefficients(alpha)) return true;
  auto shape = classify_subdiagram(rs, supp);
  int r = shape.rank;
  for (const auto& ord : shape.orderings) {
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = alpha[ord[i]];
    auto at = [&](std::initializer_list<int> pos) {
      for (int p : pos)
        if (ord[p] == delta) return true;
      return false;
    };
    switch (shape.type) {
      case 'B': {
        std::vector<int> want(r, 1);
        want[r - 1] = 2;
        if (c == want)
          for (int i = 0; i + 1 < r; ++i)
            if (ord[i] == delta) return true;
        break;
      }
      case 'C': {
        std::vector<int> want(r, 2);
        want[r - 1] = 1;
        if (c == want && ord[r - 1] == delta) return true;
        break;
      }
      case 'F':
        if (c == std::vector<int>{2, 2, 1, 1} && at({2, 3})) return true;
        break;
      case 'G':
        if ((c == std::vector<int>{2, 1} || c == std::vector<int>{3, 1}) && at({1})) return true;
        break;
      default: break;
    }
  }
  return false;
}

std::vector<int> derive_pi(const RootSystem& rs, const std::vector<RootVec>& psi) {
  std::set<RootVec> active(psi.begin(), psi.end());
  std::vector<int> out;
  for (const auto& b : psi) {
    std::vector<int> found;
    for (int d : rs.support(b)) {
      bool ok = true;
      for (const auto& b1 : rs.positive_roots()) {
        if (!ok) break;
        if (!rs.is_positive_root(minus(b, b1))) continue;
        bool outside = b1[d] == 0;
        ok = (active.count(b1) > 0) == outside;
      }
      if (ok) found.push_back(d);
    }
    if (found.size() != 1)
      throw std::logic_error("no unique associated simple root for " + rname(b) + " (" +
                             std::to_string(found.size()) + " candidates)");
    out.push_back(found[0]);
  }
  return out;
}

std::vector<RootVec> subordinate_closure(const RootSystem& rs, const RootVec& alpha, int pi) {
  if (!check_active_pattern(rs, alpha, pi))
    throw std::invalid_argument("(" + rname(alpha) + ", " + sname(pi) + ") is not an active-root pattern");
  std::vector<RootVec> rest;
  for (const auto& b : rs.positive_roots()) {
    if (!rs.is_positive_root(minus(alpha, b))) continue;
    if (contains(rs.support(b), pi)) continue;
    rest.push_back(b);
  }
  std::sort(rest.begin(), rest.end(), higher);
  std::vector<RootVec> f{alpha};
  f.insert(f.end(), rest.begin(), rest.end());
  std::vector<int> p;
  try {
    p = derive_pi(rs, f);
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(std::string("F(") + rname(alpha) + "): " + err.what());
  }
  auto supp = rs.support(alpha);
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (p[0] != pi || sorted != supp)
    throw std::invalid_argument("π is not a bijection F(" + rname(alpha) + ") -> Supp");
  return f;
}

std::vector<int> ARSSet::pi0() const {
  std::set<int> s;
  for (const auto& r : m)
    for (int a : rs.support(r)) s.insert(a);
  return {s.begin(), s.end()};
}

ARSSet canonical(const ARSSet& a) {
  std::vector<size_t> idx(a.m.size());
  std::iota(idx.begin(), idx.end(), size_t(0));
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return a.m[x] > a.m[y]; });
  ARSSet out{a.rs, {}, {}, {}};
  std::map<size_t, size_t> relabel;
  for (size_t i : idx) {
    out.m.push_back(a.m[i]);
    out.pi.push_back(a.pi[i]);
    auto it = relabel.emplace(a.cls[i], relabel.size()).first;
    out.cls.push_back(it->second);
  }
  return out;
}

Sublattice equivalence_lattice(const ARSSet& a, size_t c) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < a.m.size(); ++i)
    for (size_t j = i + 1; j < a.m.size(); ++j)
      if (a.cls[i] == a.cls[j]) gens.push_back(weight_of_root(a.rs, minus(a.m[i], a.m[j]), c));
  return Sublattice::generated_by(gens, a.rs.rank() + c);
}

ExtendedARSSet wonderful_extension(const ARSSet& a, size_t c) { return {a, c, equivalence_lattice(a, c)}; }

ExtendedARSSet normalize(const ExtendedARSSet& e) { return wonderful_extension(e.ars, e.central_rank); }

bool is_wonderful(const ExtendedARSSet& e) { return e.ker_tau == equivalence_lattice(e.ars, e.central_rank); }

std::vector<std::vector<RootVec>> ActiveRootSystem::classes() const {
  std::vector<std::vector<RootVec>> out(phi_count);
  for (size_t i = 0; i < psi.size(); ++i) out[phi[i]].push_back(psi[i]);
  return out;
}

std::vector<int> ActiveRootSystem::pi0() const {
  std::set<int> s(pi.begin(), pi.end());
  return {s.begin(), s.end()};
}

std::vector<int> ActiveRootSystem::phi_of_simple() const {
  std::vector<int> out(rs.rank(), -1);
  for (size_t i = 0; i < psi.size(); ++i) out[pi[i]] = static_cast<int>(phi[i]);
  return out;
}

ARSSet ActiveRootSystem::maximal() const {
  ARSSet out{rs, {}, {}, {}};
  for (size_t i = 0; i < psi.size(); ++i) {
    bool top = std::none_of(psi.begin(), psi.end(), [&](const RootVec& b) {
      return rs.is_positive_root(minus(b, psi[i]));
    });
    if (!top) continue;
    out.m.push_back(psi[i]);
    out.pi.push_back(pi[i]);
    out.cls.push_back(phi[i]);
  }
  return out;
}

bool same_classes(const std::vector<std::vector<RootVec>>& a, const std::vector<std::vector<RootVec>>& b) {
  auto norm = [](std::vector<std::vector<RootVec>> x) {
    for (auto& c : x) std::sort(c.begin(), c.end());
    std::sort(x.begin(), x.end());
    return x;
  };
  return norm(a) == norm(b);
}

ValidationReport validate_ars(const ARSSet& a) {
  ValidationReport rep;
  for (const char* ax : {"structure", "A", "D", "E", "C"}) rep.check(ax);
  const RootSystem& rs = a.rs;
  size_t k = a.m.size();
  if (a.pi.size() != k || a.cls.size() != k) {
    rep.fail("structure", "M, π and the class labels differ in length");
    return rep;
  }
  bool sound = true;
  for (size_t i = 0; i < k; ++i) {
    if (static_cast<int>(a.m[i].size()) != rs.rank() || !rs.is_positive_root(a.m[i])) {
      rep.fail("structure", rname(a.m[i]) + " is not a positive root");
      sound = false;
      continue;
    }
    if (a.pi[i] < 0 || a.pi[i] >= rs.rank() || !contains(rs.support(a.m[i]), a.pi[i])) {
      rep.fail("structure", "π(" + rname(a.m[i]) + ") is not in its support");
      sound = false;
      continue;
    }
    for (size_t j = 0; j < i; ++j)
      if (a.m[j] == a.m[i]) {
        rep.fail("structure", rname(a.m[i]) + " listed twice");
        sound = false;
      }
  }
  if (!sound) return rep;
  for (size_t i = 0; i < k; ++i)
    if (!check_active_pattern(rs, a.m[i], a.pi[i]))
      rep.fail("A", "(" + rname(a.m[i]) + ", " + sname(a.pi[i]) + ") is not an active-root pattern");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      auto c = pair_conditions(rs, a.m[i], a.pi[i], a.m[j], a.pi[j]);
      std::string w = rname(a.m[i]) + ", " + rname(a.m[j]);
      if (a.cls[i] != a.cls[j]) {
        if (!(c.d0 || c.d1 || c.d2)) rep.fail("D", w + " inequivalent but none of D0, D1, D2 holds");
      } else if (!(c.d0 || c.d1 || c.e1 || c.d2 || c.e2)) {
        rep.fail("E", w + " equivalent but none of D0, D1, E1, D2, E2 holds");
      }
    }
  for (size_t i = 0; i < k; ++i) {
    std::set<int> others;
    for (size_t j = 0; j < k; ++j)
      if (j != i)
        for (int x : rs.support(a.m[j])) others.insert(x);
    auto s = rs.support(a.m[i]);
    if (std::all_of(s.begin(), s.end(), [&](int x) { return others.count(x) > 0; }))
      rep.fail("C", "Supp " + rname(a.m[i]) + " is covered by the other supports");
  }
  return rep;
}

ValidationReport validate_extended(const ExtendedARSSet& e) {
  ValidationReport rep = validate_ars(e.ars);
  rep.check("T");
  size_t amb = e.ars.rs.rank() + e.central_rank;
  if (e.ker_tau.ambient() != amb) {
    rep.fail("structure", "Ker τ lives in rank " + std::to_string(e.ker_tau.ambient()) + ", expected " +
                              std::to_string(amb));
    return rep;
  }
  Sublattice z0 = simple_lattice(e.ars.rs, e.ars.pi0(), e.central_rank);
  Sublattice lhs = e.ker_tau.intersect(z0);
  Sublattice rhs = equivalence_lattice(e.ars, e.central_rank);
  if (!(lhs == rhs)) {
    for (const auto& v : lhs.basis())
      if (!rhs.contains(v)) rep.fail("T", vec_to_string(v) + " lies in Ker τ ∩ ZΠ₀ but not in Z{α−β | α∼β}");
    for (const auto& v : rhs.basis())
      if (!lhs.contains(v)) rep.fail("T", vec_to_string(v) + " is a difference of equivalent roots outside Ker τ");
  }
  return rep;
}

ActiveRootSystem expand_ars(const ARSSet& a) {
  auto rep = validate_ars(a);
  if (!rep.ok()) throw std::invalid_argument("invalid ARS-set: " + rep.text());
  const RootSystem& rs = a.rs;
  std::vector<RootVec> psi;
  std::map<RootVec, size_t> where;
  for (size_t i = 0; i < a.m.size(); ++i)
    for (const auto& r : subordinate_closure(rs, a.m[i], a.pi[i]))
      if (where.emplace(r, psi.size()).second) psi.push_back(r);

  size_t n = psi.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  UnionFind uf(n);
  for (size_t i = 0; i < a.m.size(); ++i)
    for (size_t j = 0; j < a.m.size(); ++j) {
      if (a.cls[i] != a.cls[j]) continue;
      for (size_t x = 0; x < n; ++x) {
        RootVec gamma = minus(a.m[i], psi[x]);
        if (!is_zero_root(gamma) && !rs.is_positive_root(gamma)) continue;
        auto it = where.find(minus(a.m[j], gamma));
        if (it == where.end()) continue;
        rel[x][it->second] = true;
        uf.unite(x, it->second);
      }
    }
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (uf.find(x) == uf.find(y) && !rel[x][y])
        throw std::logic_error("conflicting class assignment for " + rname(psi[x]) + " and " + rname(psi[y]));

  std::map<size_t, size_t> label;
  std::vector<size_t> phi;
  for (size_t x = 0; x < n; ++x) phi.push_back(label.emplace(uf.find(x), label.size()).first->second);
  auto out = assemble(rs, psi, phi, label.size());
  for (size_t i = 0; i < a.m.size(); ++i)
    if (out.pi[where[a.m[i]]] != a.pi[i])
      throw std::logic_error("π(" + rname(a.m[i]) + ") disagrees with the active-root rule");
  return out;
}

std::vector<Int> tau_j(const ExtendedARSSet& e, const Vec& mu) {
  auto ars = expand_ars(e.ars);
  return TauSolver(e, ars)(mu);
}

bool check_sphericity_combinatorial(const ExtendedARSSet& e) {
  try {
    auto ars = expand_ars(e.ars);
    return TauSolver(e, ars).independent;
  } catch (const std::exception&) {
    return false;
  }
}

AdmissibleMap admissible_from_ars(const ExtendedARSSet& e) {
  auto rep = validate_extended(e);
  if (!rep.ok()) throw std::invalid_argument("invalid extended ARS-set: " + rep.text());
  auto w = normalize(e);
  auto ars = expand_ars(w.ars);
  TauSolver solve(w, ars);
  int n = w.ars.rs.rank();
  AdmissibleMap m{w.ars.rs, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  auto phi_of = ars.phi_of_simple();
  auto pi0 = ars.pi0();
  for (int b : pi0) {
    auto j = solve(simple_weight(w.ars.rs, b, w.central_rank));
    for (int a : pi0) m.eta[a][b] = static_cast<int>(j[phi_of[a]].get_si());
  }
  return m;
}

ActiveRootSystem ars_from_admissible(const AdmissibleMap& m) {
  if (!validate_admissible(m).ok()) throw std::invalid_argument("map is not admissible");
  const RootSystem& rs = m.rs;
  auto pe = m.support();
  std::vector<std::vector<int>> rho;
  for (int a : pe) {
    std::vector<int> row;
    for (int b : pe) row.push_back(m(a, b));
    if (std::find(rho.begin(), rho.end(), row) == rho.end()) rho.push_back(row);
  }
  std::vector<std::vector<RootVec>> classes(rho.size());
  for (const auto& r : rs.positive_roots()) {
    auto s = rs.support(r);
    if (!std::all_of(s.begin(), s.end(), [&](int x) { return contains(pe, x); })) continue;
    int hit = -1, ones = 0;
    bool zero_else = true;
    for (size_t k = 0; k < rho.size(); ++k) {
      int v = 0;
      for (size_t j = 0; j < pe.size(); ++j) v += rho[k][j] * r[pe[j]];
      if (v == 1) {
        ++ones;
        hit = static_cast<int>(k);
      } else if (v != 0) {
        zero_else = false;
      }
    }
    if (ones == 1 && zero_else) classes[hit].push_back(r);
  }
  std::vector<RootVec> psi;
  std::vector<size_t> phi;
  for (size_t k = 0; k < classes.size(); ++k) {
    std::sort(classes[k].begin(), classes[k].end(), higher);
    for (const auto& r : classes[k]) {
      psi.push_back(r);
      phi.push_back(k);
    }
  }
  return assemble(rs, psi, phi, classes.size());
}

HomogeneousSphericalDatum hsd_from_ars(const ExtendedARSSet& e) {
  auto rep = validate_extended(e);
  if (!rep.ok()) throw std::invalid_argument("invalid extended ARS-set: " + rep.text());
  const RootSystem& rs = e.ars.rs;
  size_t c = e.central_rank;
  auto ars = expand_ars(e.ars);
  TauSolver solve(e, ars);
  if (!solve.independent) throw std::invalid_argument("classes are dependent modulo Ker τ");
  auto pi0 = ars.pi0();
  auto phi_of = ars.phi_of_simple();

  HomogeneousSphericalDatum d;
  d.rs = rs;
  d.central_rank = c;
  std::vector<Vec> gens;
  for (int a : pi0) gens.push_back(simple_weight(rs, a, c));
  for (const auto& k : e.ker_tau.basis()) gens.push_back(k);
  d.lattice = Sublattice::generated_by(gens, rs.rank() + c);
  for (int a : pi0) d.sigma.push_back(simple_weight(rs, a, c));

  std::vector<std::vector<Int>> j;
  for (const auto& b : d.lattice.basis()) j.push_back(solve(b));
  for (int a : pi0) {
    Vec f;
    for (size_t i = 0; i < j.size(); ++i) f.push_back(d.lattice.basis()[i][a] - j[i][phi_of[a]]);
    d.colors.push_back(f);
  }
  for (size_t p = 0; p < ars.phi_count; ++p) {
    Vec f;
    for (size_t i = 0; i < j.size(); ++i) f.push_back(j[i][p]);
    d.colors.push_back(f);
  }
  return d;
}

ExtendedARSSet ars_from_hsd(const HomogeneousSphericalDatum& d, const std::vector<size_t>& dsc) {
  auto sorted = dsc;
  std::sort(sorted.begin(), sorted.end());
  auto ws = strong_solvability_witnesses(d);
  if (std::find(ws.begin(), ws.end(), sorted) == ws.end())
    throw std::invalid_argument("subset is not a strong-solvability witness");
  const RootSystem& rs = d.rs;
  int n = rs.rank();
  size_t c = d.central_rank;
  std::vector<int> sigma_idx;
  for (const auto& s : d.sigma) {
    int a = simple_index(rs, s);
    if (a < 0) throw std::invalid_argument("strongly solvable datum with a non-simple spherical root");
    sigma_idx.push_back(a);
  }
  auto fc = full_color_set(d);
  size_t nd = fc.colors.size();
  auto in_dsc = [&](size_t i) { return std::binary_search(sorted.begin(), sorted.end(), i); };

  // D_alpha: the color of D(alpha) outside D'.
  std::vector<size_t> d_alpha(n);
  for (int a = 0; a < n; ++a) {
    std::vector<size_t> rest;
    for (size_t i : fc.d_of[a])
      if (!in_dsc(i)) rest.push_back(i);
    if (rest.size() != 1) throw std::invalid_argument("D(" + sname(a) + ") minus D' is not a single color");
    d_alpha[a] = rest[0];
  }

  // Ker psi inside Z^D + X(C).
  size_t amb = nd + c;
  std::vector<Vec> rel;
  const auto& basis = d.lattice.basis();
  for (size_t j = 0; j < basis.size(); ++j) {
    Vec v = zero_vec(amb);
    for (size_t i = 0; i < nd; ++i) v[i] = fc.colors[i].kappa[j];
    for (size_t q = 0; q < c; ++q) v[nd + q] = -basis[j][n + q];
    rel.push_back(v);
  }
  Sublattice kpsi = Sublattice::generated_by(rel, amb);

  // X(T) = Z^{D°} + X(C) with D_alpha <-> -varpi_alpha.
  auto to_weight = [&](const Vec& u) {
    Vec w = zero_vec(n + c);
    for (int a = 0; a < n; ++a) w[a] = -u[d_alpha[a]];
    for (size_t q = 0; q < c; ++q) w[n + q] = u[nd + q];
    return w;
  };
  std::vector<Vec> circ;
  for (int a = 0; a < n; ++a) {
    Vec v = zero_vec(amb);
    v[d_alpha[a]] = 1;
    circ.push_back(v);
  }
  for (size_t q = 0; q < c; ++q) {
    Vec v = zero_vec(amb);
    v[nd + q] = 1;
    circ.push_back(v);
  }
  Sublattice ker = kpsi.intersect(Sublattice::generated_by(circ, amb));
  std::vector<Vec> ker_w;
  for (const auto& k : ker.basis()) ker_w.push_back(to_weight(k));
  Sublattice ker_tau = Sublattice::generated_by(ker_w, n + c);

  // Phi: psi(D - sum_{alpha in Pi_D} D_alpha), moved into Z^{D°} + X(C).
  std::vector<Vec> kb = kpsi.basis();
  std::vector<Vec> phis;
  for (size_t dd : sorted) {
    Vec v = zero_vec(amb);
    v[dd] += 1;
    for (int a : fc.colors[dd].simple) v[d_alpha[a]] -= 1;
    std::vector<Vec> proj;
    Vec target;
    for (size_t i : sorted) target.push_back(v[i]);
    for (const auto& k : kb) {
      Vec p;
      for (size_t i : sorted) p.push_back(k[i]);
      proj.push_back(p);
    }
    Vec u = v;
    if (!proj.empty()) {
      auto x = solve_left(proj, target, sorted.size());
      if (!x) throw std::logic_error("psi restricted to D° is not surjective");
      for (size_t i = 0; i < kb.size(); ++i) u = sub(u, scale((*x)[i], kb[i]));
    } else if (!is_zero(target)) {
      throw std::logic_error("psi restricted to D° is not surjective");
    }
    phis.push_back(to_weight(u));
  }

  // Psi_phi: positive roots in Z^+ Sigma with tau(alpha) = phi.
  std::vector<std::vector<RootVec>> classes(phis.size());
  for (const auto& r : rs.positive_roots()) {
    auto s = rs.support(r);
    if (!std::all_of(s.begin(), s.end(), [&](int x) { return contains(sigma_idx, x); })) continue;
    Vec w = weight_of_root(rs, r, c);
    int hit = -1;
    for (size_t p = 0; p < phis.size(); ++p)
      if (ker_tau.contains(sub(w, phis[p]))) {
        if (hit >= 0) throw std::logic_error(rname(r) + " lies in two classes");
        hit = static_cast<int>(p);
      }
    if (hit >= 0) classes[hit].push_back(r);
  }
  std::vector<RootVec> psi;
  std::vector<size_t> phi;
  for (size_t p = 0; p < classes.size(); ++p) {
    std::sort(classes[p].begin(), classes[p].end(), higher);
    for (const auto& r : classes[p]) {
      psi.push_back(r);
      phi.push_back(p);
    }
  }
  auto ars = assemble(rs, psi, phi, classes.size());
  return {ars.maximal(), c, ker_tau};
}

bool same_datum(const HomogeneousSphericalDatum& a, const HomogeneousSphericalDatum& b) {
  if (!(a.rs == b.rs) || a.central_rank != b.central_rank || !(a.lattice == b.lattice) || a.pi_p != b.pi_p)
    return false;
  auto sa = a.sigma, sb = b.sigma;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  auto ca = a.colors, cb = b.colors;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return sa == sb && ca == cb;
}

ValidationReport structural_laws(const ExtendedARSSet& e) {
  ValidationReport rep;
  for (const char* ax : {"angle", "lattice", "shift", "pi", "tau"}) rep.check(ax);
  const RootSystem& rs = e.ars.rs;
  auto ars = expand_ars(e.ars);
  const auto& m = e.ars.m;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (rs.inner(m[i], m[j]) > 0) rep.fail("angle", rname(m[i]) + " and " + rname(m[j]) + " form an acute angle");

  int n = rs.rank();
  std::vector<Vec> psi_v, pi0_v;
  for (const auto& r : ars.psi) psi_v.push_back(to_vec(r));
  for (int a : e.ars.pi0()) pi0_v.push_back(to_vec(rs.simple(a)));
  if (!(Sublattice::generated_by(psi_v, n) == Sublattice::generated_by(pi0_v, n)))
    rep.fail("lattice", "ZΨ differs from ZΠ₀");

  auto cls = ars.classes();
  std::set<RootVec> all(ars.psi.begin(), ars.psi.end());
  for (size_t x = 0; x < ars.psi.size(); ++x)
    for (size_t y = 0; y < ars.psi.size(); ++y) {
      if (x == y) continue;
      RootVec g = minus(ars.psi[y], ars.psi[x]);
      if (!rs.is_positive_root(g)) continue;
      for (const auto& r : cls[ars.phi[x]]) {
        auto moved = plus(r, g);
        auto it = std::find(ars.psi.begin(), ars.psi.end(), moved);
        if (it == ars.psi.end() || ars.phi[it - ars.psi.begin()] != ars.phi[y])
          rep.fail("shift", rname(r) + " + " + rname(g) + " is not in the class of " + rname(ars.psi[y]));
      }
    }

  std::vector<std::set<int>> images(ars.phi_count);
  for (size_t x = 0; x < ars.psi.size(); ++x) images[ars.phi[x]].insert(ars.pi[x]);
  std::vector<int> seen;
  for (size_t p = 0; p < images.size(); ++p)
    for (int a : images[p]) {
      if (contains(seen, a)) rep.fail("pi", sname(a) + " is π of roots in two classes");
      seen.push_back(a);
    }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen != e.ars.pi0()) rep.fail("pi", "π(Ψ) differs from Π₀");

  size_t c = e.central_rank;
  for (size_t x = 0; x < ars.psi.size(); ++x)
    for (size_t y = x + 1; y < ars.psi.size(); ++y) {
      bool same_tau = e.ker_tau.contains(weight_of_root(rs, minus(ars.psi[x], ars.psi[y]), c));
      if (same_tau != (ars.phi[x] == ars.phi[y]))
        rep.fail("tau", rname(ars.psi[x]) + ", " + rname(ars.psi[y]) + ": equivalence and τ disagree");
    }
  return rep;
}

}  // namespace spherica
