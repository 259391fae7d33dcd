#include "spherica/luna.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "spherica/fans.hpp"
#include "spherica/lp.hpp"

namespace spherica {

using Rel = LinearProgram::Rel;

Vec weight_of(const RootSystem& rs, const RootVec& root, size_t central_rank) {
  Vec w = to_vec(rs.to_weight(root));
  w.resize(rs.rank() + central_rank, 0);
  return w;
}

Vec simple_weight(const RootSystem& rs, int i, size_t central_rank) {
  return weight_of(rs, rs.simple(i), central_rank);
}

QVec root_coords(const RootSystem& rs, const Vec& weight) {
  int n = rs.rank();
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(simple_weight(rs, i));
  Vec ss(weight.begin(), weight.begin() + n);
  auto x = solve_left_q(rows, ss);
  if (!x) throw std::logic_error("Cartan matrix is singular");
  return *x;
}

std::string weight_to_root_string(const RootSystem& rs, const Vec& weight) {
  QVec c = root_coords(rs, weight);
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] < 0) s += "-";
    else if (!s.empty()) s += "+";
    Rat a = abs(c[i]);
    if (a != 1) s += a.get_str();
    s += "α" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

int simple_index(const RootSystem& rs, const Vec& weight) {
  int n = rs.rank();
  for (size_t j = n; j < weight.size(); ++j)
    if (weight[j] != 0) return -1;
  for (int i = 0; i < n; ++i) {
    bool eq = true;
    for (int j = 0; j < n && eq; ++j) eq = weight[j] == rs.cartan(j, i);
    if (eq) return i;
  }
  return -1;
}

namespace {

std::vector<std::vector<int>> connected_subsets(const RootSystem& rs) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rs.rank(); ++i) {
    seen.insert({i});
    frontier.push_back({i});
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int v = 0; v < rs.rank(); ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        bool adj = std::any_of(s.begin(), s.end(), [&](int u) { return rs.adjacent(u, v); });
        if (!adj) continue;
        auto t = s;
        t.push_back(v);
        std::sort(t.begin(), t.end());
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void add_root(const RootSystem& rs, std::vector<SphericalRootInfo>& out, std::set<Vec>& seen, RootVec sigma,
              int row, bool halvable, int drop) {
  int n = rs.rank();
  SphericalRootInfo info;
  info.weight = weight_of(rs, sigma);
  info.coords.assign(sigma.begin(), sigma.end());
  info.row = row;
  info.support = rs.support(sigma);
  for (int i = 0; i < n; ++i)
    if (info.weight[i] == 0) info.p_sigma.push_back(i);
  for (int i : info.support)
    if (info.weight[i] == 0 && i != drop) info.pp.push_back(i);
  if (seen.insert(info.weight).second) out.push_back(info);
  if (!halvable) return;
  SphericalRootInfo h = info;
  h.half = true;
  for (auto& x : h.weight) {
    if (x % 2 != 0) return;
    x /= 2;
  }
  for (auto& q : h.coords) q /= 2;
  if (seen.insert(h.weight).second) out.push_back(h);
}

std::vector<SphericalRootInfo> build_catalog(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<SphericalRootInfo> out;
  std::set<Vec> seen;
  for (const auto& nodes : connected_subsets(rs)) {
    auto shape = classify_subdiagram(rs, nodes);
    int r = shape.rank;
    for (const auto& ord : shape.orderings) {
      auto make = [&](std::vector<int> coeff) {
        RootVec v(n, 0);
        for (int i = 0; i < r; ++i) v[ord[i]] = coeff[i];
        return v;
      };
      std::vector<int> ones(r, 1);
      if (r == 1) {
        add_root(rs, out, seen, make({1}), 1, false, -1);
        add_root(rs, out, seen, make({2}), 2, false, -1);
        continue;
      }
      switch (shape.type) {
        case 'A':
          add_root(rs, out, seen, make(ones), 4, false, -1);
          if (r == 3) add_root(rs, out, seen, make({1, 2, 1}), 5, true, -1);
          break;
        case 'B': {
          add_root(rs, out, seen, make(ones), 6, false, ord[r - 1]);
          add_root(rs, out, seen, make(std::vector<int>(r, 2)), 7, false, -1);
          if (r == 3) add_root(rs, out, seen, make({1, 2, 3}), 8, true, -1);
          break;
        }
        case 'C': {
          std::vector<int> c(r, 2);
          c[0] = 1;
          c[r - 1] = 1;
          add_root(rs, out, seen, make(c), 9, false, ord[0]);
          break;
        }
        case 'D': {
          std::vector<int> c(r, 2);
          c[r - 2] = 1;
          c[r - 1] = 1;
          add_root(rs, out, seen, make(c), 10, true, -1);
          break;
        }
        case 'F': add_root(rs, out, seen, make({2, 3, 2, 1}), 11, false, -1); break;
        case 'G':
          add_root(rs, out, seen, make({1, 1}), 12, false, -1);
          add_root(rs, out, seen, make({2, 1}), 13, false, -1);
          add_root(rs, out, seen, make({4, 2}), 14, false, -1);
          break;
        default: break;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rs.cartan(i, j) == 0) {
        RootVec v(n, 0);
        v[i] = v[j] = 1;
        add_root(rs, out, seen, v, 3, true, -1);
      }
  return out;
}

}  // namespace

std::vector<SphericalRootInfo> spherical_roots_of(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::string, std::vector<SphericalRootInfo>> cache;
  std::string key = rs.diagram().name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto cat = build_catalog(rs);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, cat);
  return cat;
}

std::optional<SphericalRootInfo> find_spherical_root(const RootSystem& rs, const Vec& weight) {
  size_t n = rs.rank();
  for (size_t j = n; j < weight.size(); ++j)
    if (weight[j] != 0) return std::nullopt;
  Vec ss(weight.begin(), weight.begin() + n);
  for (const auto& info : spherical_roots_of(rs))
    if (info.weight == ss) return info;
  return std::nullopt;
}

bool check_compatibility(const RootSystem& rs, const std::vector<int>& pi_p, const Vec& sigma) {
  auto info = find_spherical_root(rs, sigma);
  if (!info) throw std::invalid_argument("not a spherical root: " + vec_to_string(sigma));
  std::set<int> p(pi_p.begin(), pi_p.end());
  for (int a : info->pp)
    if (!p.count(a)) return false;
  std::set<int> ps(info->p_sigma.begin(), info->p_sigma.end());
  for (int a : pi_p)
    if (!ps.count(a)) return false;
  return true;
}

Int HomogeneousSphericalDatum::kappa(const Vec& functional, const Vec& lambda) const {
  auto c = lattice.coordinates(lambda);
  if (!c) throw std::invalid_argument("character outside the lattice: " + vec_to_string(lambda));
  return dot(*c, functional);
}

Vec HomogeneousSphericalDatum::coroot_on_basis(int alpha) const {
  Vec v;
  for (const auto& b : lattice.basis()) v.push_back(b[alpha]);
  return v;
}

HomogeneousSphericalDatum SphericalSystem::datum() const {
  HomogeneousSphericalDatum d;
  d.rs = rs;
  d.pi_p = pi_p;
  d.sigma = sigma;
  size_t n = rs.rank();
  d.lattice = Sublattice::generated_by(sigma, n);
  for (const auto& k : colors) {
    Vec f;
    for (const auto& b : d.lattice.basis()) {
      auto x = solve_left(sigma, b, n);
      if (!x) throw std::logic_error("lattice basis outside Z Sigma");
      f.push_back(dot(*x, k));
    }
    d.colors.push_back(f);
  }
  return d;
}

SphericalSystem make_system(const RootSystem& rs, const std::vector<RootVec>& sigma,
                            const std::vector<std::vector<long>>& kappa, std::vector<int> pi_p) {
  SphericalSystem s;
  s.rs = rs;
  std::sort(pi_p.begin(), pi_p.end());
  s.pi_p = pi_p;
  for (const auto& r : sigma) s.sigma.push_back(weight_of(rs, r));
  for (const auto& row : kappa) {
    Vec k;
    for (long x : row) k.push_back(x);
    s.colors.push_back(k);
  }
  return s;
}

SphericalSystem system_of(const HomogeneousSphericalDatum& d) {
  SphericalSystem s;
  s.rs = d.rs;
  s.pi_p = d.pi_p;
  size_t n = d.rs.rank();
  for (const auto& sg : d.sigma) s.sigma.push_back(Vec(sg.begin(), sg.begin() + n));
  for (const auto& k : d.colors) {
    Vec row;
    for (const auto& sg : d.sigma) row.push_back(d.kappa(k, sg));
    s.colors.push_back(row);
  }
  return s;
}

SphericalSystem canonical(const SphericalSystem& s, std::vector<size_t>* perm) {
  std::vector<size_t> sord(s.sigma.size());
  std::iota(sord.begin(), sord.end(), 0);
  std::vector<QVec> coords;
  for (const auto& w : s.sigma) coords.push_back(root_coords(s.rs, w));
  std::stable_sort(sord.begin(), sord.end(), [&](size_t a, size_t b) { return coords[a] > coords[b]; });
  SphericalSystem out;
  out.rs = s.rs;
  out.pi_p = s.pi_p;
  std::sort(out.pi_p.begin(), out.pi_p.end());
  for (size_t j : sord) out.sigma.push_back(s.sigma[j]);
  std::vector<Vec> cols;
  for (const auto& k : s.colors) {
    Vec r;
    for (size_t j : sord) r.push_back(k[j]);
    cols.push_back(r);
  }
  std::vector<size_t> cord(cols.size());
  std::iota(cord.begin(), cord.end(), 0);
  std::stable_sort(cord.begin(), cord.end(), [&](size_t a, size_t b) { return cols[a] < cols[b]; });
  for (size_t i : cord) out.colors.push_back(cols[i]);
  if (perm) *perm = cord;
  return out;
}

namespace {

std::string color_name(size_t k) { return "D" + std::to_string(k + 1); }
std::string root_name(int a) { return "α" + std::to_string(a + 1); }

}  // namespace

ValidationReport validate_hsd(const HomogeneousSphericalDatum& d) {
  ValidationReport rep;
  for (const char* ax : {"structure", "A1", "A2", "A3", "Sigma1", "Sigma2", "S"}) rep.check(ax);
  const RootSystem& rs = d.rs;
  int n = rs.rank();
  size_t amb = d.ambient();
  bool broken = false;
  auto bad = [&](const std::string& w) {
    rep.fail("structure", w);
    broken = true;
  };
  if (d.lattice.ambient() != amb) bad("lattice has ambient rank " + std::to_string(d.lattice.ambient()));
  for (size_t i = 0; i < d.pi_p.size(); ++i)
    if (d.pi_p[i] < 0 || d.pi_p[i] >= n || (i && d.pi_p[i] <= d.pi_p[i - 1])) bad("invalid Pi^p entry");
  for (size_t k = 0; k < d.colors.size(); ++k)
    if (d.colors[k].size() != d.lattice.rank()) bad(color_name(k) + " has the wrong number of values");
  for (const auto& sg : d.sigma) {
    if (sg.size() != amb) {
      bad("spherical root of wrong length");
      continue;
    }
    if (!find_spherical_root(rs, sg)) bad(weight_to_root_string(rs, sg) + " is not a spherical root of G");
    if (d.lattice.ambient() != amb) continue;
    auto c = d.lattice.coordinates(sg);
    if (!c) bad(weight_to_root_string(rs, sg) + " is not in Lambda");
    else if (content(*c) != 1) bad(weight_to_root_string(rs, sg) + " is not primitive in Lambda");
  }
  if (!broken && rank_q(d.sigma, amb) != d.sigma.size()) bad("Sigma is linearly dependent");
  if (broken) return rep;

  size_t m = d.sigma.size();
  std::vector<int> a_of(m);
  std::vector<int> in_sigma(n, -1), twice_in_sigma(n, -1);
  for (size_t j = 0; j < m; ++j) {
    a_of[j] = simple_index(rs, d.sigma[j]);
    if (a_of[j] >= 0) in_sigma[a_of[j]] = static_cast<int>(j);
    for (int a = 0; a < n; ++a)
      if (d.sigma[j] == scale(2, simple_weight(rs, a, d.central_rank))) twice_in_sigma[a] = static_cast<int>(j);
  }
  std::vector<std::vector<Int>> K(d.colors.size(), std::vector<Int>(m));
  for (size_t k = 0; k < d.colors.size(); ++k)
    for (size_t j = 0; j < m; ++j) K[k][j] = d.kappa(d.colors[k], d.sigma[j]);

  for (size_t k = 0; k < d.colors.size(); ++k)
    for (size_t j = 0; j < m; ++j) {
      std::string at = "<κ(" + color_name(k) + "), " + weight_to_root_string(rs, d.sigma[j]) + "> = " + K[k][j].get_str();
      if (K[k][j] > 1) rep.fail("A1", at + " > 1");
      else if (K[k][j] == 1 && a_of[j] < 0) rep.fail("A1", at + " with σ not simple");
    }
  for (int a = 0; a < n; ++a) {
    if (in_sigma[a] < 0) continue;
    std::vector<size_t> ds;
    for (size_t k = 0; k < d.colors.size(); ++k)
      if (K[k][in_sigma[a]] == 1) ds.push_back(k);
    if (ds.size() != 2) {
      rep.fail("A2", "|D(" + root_name(a) + ")| = " + std::to_string(ds.size()));
      continue;
    }
    Vec sum = add(d.colors[ds[0]], d.colors[ds[1]]);
    if (sum != d.coroot_on_basis(a))
      rep.fail("A2", "κ(" + color_name(ds[0]) + ") + κ(" + color_name(ds[1]) + ") = " + vec_to_string(sum) +
                         " differs from " + root_name(a) + "^∨ = " + vec_to_string(d.coroot_on_basis(a)));
  }
  for (size_t k = 0; k < d.colors.size(); ++k) {
    bool hit = false;
    for (size_t j = 0; j < m && !hit; ++j) hit = a_of[j] >= 0 && K[k][j] == 1;
    if (!hit) rep.fail("A3", color_name(k) + " lies in no D(α)");
  }
  for (int a = 0; a < n; ++a) {
    if (twice_in_sigma[a] < 0) continue;
    for (const auto& x : d.coroot_on_basis(a))
      if (x % 2 != 0) {
        rep.fail("Sigma1", "<" + root_name(a) + "^∨, Λ> is not in 2Z");
        break;
      }
    for (size_t j = 0; j < m; ++j)
      if (static_cast<int>(j) != twice_in_sigma[a] && d.sigma[j][a] > 0)
        rep.fail("Sigma1", "<" + root_name(a) + "^∨, " + weight_to_root_string(rs, d.sigma[j]) + "> > 0");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (rs.cartan(a, b) != 0) continue;
      Vec w = add(simple_weight(rs, a, d.central_rank), simple_weight(rs, b, d.central_rank));
      bool hit = false;
      for (const auto& sg : d.sigma) hit = hit || sg == w || scale(2, sg) == w;
      if (hit && d.coroot_on_basis(a) != d.coroot_on_basis(b))
        rep.fail("Sigma2", root_name(a) + "^∨ and " + root_name(b) + "^∨ differ on Λ");
    }
  for (int a : d.pi_p)
    if (!is_zero(d.coroot_on_basis(a))) rep.fail("S", "<" + root_name(a) + "^∨, Λ> ≠ 0 for α in Π^p");
  for (const auto& sg : d.sigma)
    if (!check_compatibility(rs, d.pi_p, sg))
      rep.fail("S", "(Π^p, " + weight_to_root_string(rs, sg) + ") is not compatible");
  return rep;
}

ValidationReport validate_hsd(const SphericalSystem& s) {
  size_t n = s.rs.rank();
  bool shaped = true;
  for (const auto& sg : s.sigma) shaped = shaped && sg.size() == n;
  for (const auto& k : s.colors) shaped = shaped && k.size() == s.sigma.size();
  if (!shaped || rank_q(s.sigma, n) != s.sigma.size()) {
    ValidationReport rep;
    rep.fail("structure", shaped ? "Sigma is linearly dependent" : "inconsistent sizes");
    return rep;
  }
  return validate_hsd(s.datum());
}

size_t FullColorSet::count(ColorType t) const {
  return std::count_if(colors.begin(), colors.end(), [&](const FullColor& c) { return c.type == t; });
}

FullColorSet full_color_set(const HomogeneousSphericalDatum& d) {
  const RootSystem& rs = d.rs;
  int n = rs.rank();
  FullColorSet fc;
  std::vector<bool> is_a(n, false), is_ap(n, false), is_p(n, false);
  for (int a : d.pi_p) is_p[a] = true;
  std::map<int, size_t> col_of;
  for (size_t j = 0; j < d.sigma.size(); ++j) {
    int a = simple_index(rs, d.sigma[j]);
    if (a >= 0) {
      is_a[a] = true;
      col_of[a] = j;
    }
    for (int b = 0; b < n; ++b)
      if (d.sigma[j] == scale(2, simple_weight(rs, b, d.central_rank))) is_ap[b] = true;
  }
  for (const auto& k : d.colors) {
    FullColor c{ColorType::a, k, {}};
    for (auto [a, j] : col_of)
      if (d.kappa(k, d.sigma[j]) == 1) c.simple.push_back(a);
    fc.colors.push_back(c);
  }
  for (int a = 0; a < n; ++a) {
    if (!is_ap[a]) continue;
    Vec k = d.coroot_on_basis(a);
    for (auto& x : k) {
      if (x % 2 != 0) throw std::invalid_argument("a'-color with odd coroot values");
      x /= 2;
    }
    fc.colors.push_back({ColorType::a_prime, k, {a}});
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto is_b = [&](int a) { return !is_a[a] && !is_ap[a] && !is_p[a]; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!is_b(a) || !is_b(b) || rs.cartan(a, b) != 0) continue;
      Vec w = add(simple_weight(rs, a, d.central_rank), simple_weight(rs, b, d.central_rank));
      for (const auto& sg : d.sigma)
        if (sg == w || scale(2, sg) == w) parent[find(a)] = find(b);
    }
  std::map<int, std::vector<int>> classes;
  for (int a = 0; a < n; ++a)
    if (is_b(a)) classes[find(a)].push_back(a);
  std::vector<std::vector<int>> ordered;
  for (auto& [r, members] : classes) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& members : ordered) fc.colors.push_back({ColorType::b, d.coroot_on_basis(members[0]), members});
  fc.d_of.assign(n, {});
  for (size_t k = 0; k < fc.colors.size(); ++k)
    for (int a : fc.colors[k].simple) fc.d_of[a].push_back(k);
  return fc;
}

FullColorSet full_color_set(const SphericalSystem& s) { return full_color_set(s.datum()); }

namespace {

std::vector<std::vector<Int>> values_on_sigma(const HomogeneousSphericalDatum& d, const FullColorSet& fc) {
  std::vector<std::vector<Int>> K;
  for (const auto& c : fc.colors) {
    std::vector<Int> row;
    for (const auto& sg : d.sigma) row.push_back(d.kappa(c.kappa, sg));
    K.push_back(row);
  }
  return K;
}

// n_D >= 1 on `subset`, <delta, sigma_j> >= bound_j.
std::optional<QVec> positive_combination(const std::vector<std::vector<Int>>& K, const std::vector<size_t>& subset,
                                         const std::vector<Rat>& bound) {
  LinearProgram lp;
  for (size_t i = 0; i < subset.size(); ++i) lp.add_var(Rat(1));
  for (size_t j = 0; j < bound.size(); ++j) {
    QVec row(subset.size());
    for (size_t i = 0; i < subset.size(); ++i) row[i] = K[subset[i]][j];
    lp.add(row, Rel::GE, bound[j]);
  }
  return lp.feasible_point();
}

void combinations(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur;
  std::function<void(size_t)> go = [&](size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
}

// Indecomposable elements of {x in Z^m_{>=0} : eqs . x = 0}.
std::vector<Vec> hilbert_basis(const std::vector<Vec>& eqs, size_t m) {
  std::set<Vec> rays;
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::vector<Vec> rows = eqs;
    for (size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        Vec e = zero_vec(m);
        e[i] = 1;
        rows.push_back(e);
      }
    std::vector<Vec> ker;
    if (rows.empty()) ker = IntMatrix::identity(m).row_list();
    else ker = left_kernel(IntMatrix::from_rows(rows, m).transpose());
    if (ker.size() != 1) continue;
    Vec r = primitive(ker[0]);
    bool pos = std::all_of(r.begin(), r.end(), [](const Int& x) { return x >= 0; });
    bool neg = std::all_of(r.begin(), r.end(), [](const Int& x) { return x <= 0; });
    if (neg && !pos) r = scale(-1, r);
    if (pos || neg) rays.insert(r);
  }
  if (rays.empty()) return {};
  Vec bound = zero_vec(m);
  for (const auto& r : rays) bound = add(bound, r);
  Int volume = 1;
  for (const auto& b : bound) volume *= b + 1;
  if (volume > 2000000) throw std::runtime_error("Hilbert basis search box too large");
  std::vector<Vec> members;
  Vec x = zero_vec(m);
  while (true) {
    size_t p = 0;
    while (p < m && x[p] == bound[p]) x[p++] = 0;
    if (p == m) break;
    x[p] += 1;
    bool ok = true;
    for (const auto& e : eqs) ok = ok && dot(e, x) == 0;
    if (ok) members.push_back(x);
  }
  std::sort(members.begin(), members.end(), [](const Vec& a, const Vec& b) {
    Int sa = 0, sb = 0;
    for (const auto& v : a) sa += v;
    for (const auto& v : b) sb += v;
    if (sa != sb) return sa < sb;
    return a > b;
  });
  std::vector<Vec> basis;
  for (const auto& cand : members) {
    bool dec = false;
    for (const auto& y : members) {
      if (y == cand) break;
      bool le = true;
      for (size_t i = 0; i < m && le; ++i) le = y[i] <= cand[i];
      if (le) {
        dec = true;
        break;
      }
    }
    if (!dec) basis.push_back(cand);
  }
  return basis;
}

}  // namespace

std::optional<DistinguishedWitness> is_distinguished(const HomogeneousSphericalDatum& d,
                                                     const std::vector<size_t>& subset) {
  auto fc = full_color_set(d);
  for (size_t i : subset)
    if (i >= fc.colors.size()) throw std::invalid_argument("color index out of range");
  auto K = values_on_sigma(d, fc);
  auto sol = positive_combination(K, subset, std::vector<Rat>(d.sigma.size(), 0));
  if (!sol) return std::nullopt;
  DistinguishedWitness w;
  w.coefficients = clear_denominators(*sol);
  w.delta = zero_vec(d.sigma.size());
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < d.sigma.size(); ++j) w.delta[j] += w.coefficients[i] * K[subset[i]][j];
  return w;
}

std::optional<DistinguishedWitness> is_distinguished(const SphericalSystem& s, const std::vector<size_t>& subset) {
  return is_distinguished(s.datum(), subset);
}

ColoredConeCheck colored_cone_check(const HomogeneousSphericalDatum& d, const std::vector<size_t>& colors,
                                    const std::vector<Vec>& valuations) {
  auto fc = full_color_set(d);
  std::vector<Vec> sigma_coords;
  for (const auto& sg : d.sigma) sigma_coords.push_back(*d.lattice.coordinates(sg));
  std::vector<Vec> gens;
  ColoredConeCheck r;
  r.scc = true;
  for (size_t k : colors) {
    gens.push_back(fc.colors[k].kappa);
    if (is_zero(fc.colors[k].kappa)) r.scc = false;
  }
  r.cc1 = true;
  for (const auto& v : valuations) {
    for (const auto& sc : sigma_coords) r.cc1 = r.cc1 && dot(v, sc) <= 0;
    gens.push_back(v);
  }
  LinearProgram lp;
  for (size_t i = 0; i < gens.size(); ++i) lp.add_var(Rat(1));
  for (const auto& sc : sigma_coords) {
    QVec row(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) row[i] = dot(gens[i], sc);
    lp.add(row, Rel::LE, 0);
  }
  r.cc2 = gens.empty() || lp.feasible_point().has_value();
  r.scc = r.scc && validate_cone(Cone(d.lattice.rank(), gens)).strictly_convex;
  return r;
}

SphericalSystem quotient_system(const SphericalSystem& s, const std::vector<size_t>& subset) {
  auto d = s.datum();
  if (!is_distinguished(d, subset)) throw std::invalid_argument("subset of colors is not distinguished");
  auto fc = full_color_set(d);
  auto K = values_on_sigma(d, fc);
  size_t m = s.sigma.size();
  std::vector<bool> keep(m, true);
  for (size_t j = 0; j < m; ++j) {
    std::vector<Rat> bound(m, 0);
    bound[j] = 1;
    if (positive_combination(K, subset, bound)) keep[j] = false;
  }
  std::vector<Vec> eqs;
  for (size_t k : subset) {
    Vec e;
    for (size_t j = 0; j < m; ++j) e.push_back(K[k][j]);
    eqs.push_back(e);
  }
  for (size_t j = 0; j < m; ++j)
    if (!keep[j]) {
      Vec e = zero_vec(m);
      e[j] = 1;
      eqs.push_back(e);
    }
  auto hb = hilbert_basis(eqs, m);

  // The semigroup must be free and generate Lambda/D'.
  std::vector<Vec> kernel;
  if (!eqs.empty()) kernel = left_kernel(IntMatrix::from_rows(eqs, m).transpose());
  else kernel = IntMatrix::identity(m).row_list();
  if (!(Sublattice::generated_by(hb, m) == Sublattice::generated_by(kernel, m)) || rank_q(hb, m) != hb.size())
    throw std::logic_error("quotient semigroup is not free");

  SphericalSystem q;
  q.rs = s.rs;
  int n = s.rs.rank();
  for (int a = 0; a < n; ++a) {
    bool inside = true;
    for (size_t k : fc.d_of[a]) inside = inside && std::find(subset.begin(), subset.end(), k) != subset.end();
    if (inside) q.pi_p.push_back(a);
  }
  for (const auto& x : hb) {
    Vec w = zero_vec(n);
    for (size_t j = 0; j < m; ++j) w = add(w, scale(x[j], s.sigma[j]));
    q.sigma.push_back(w);
  }
  std::set<size_t> da;
  for (const auto& w : q.sigma) {
    int a = simple_index(s.rs, w);
    if (a >= 0) da.insert(fc.d_of[a].begin(), fc.d_of[a].end());
  }
  for (size_t k : da) {
    Vec row;
    for (const auto& x : hb) {
      Int v = 0;
      for (size_t j = 0; j < m; ++j) v += x[j] * K[k][j];
      row.push_back(v);
    }
    q.colors.push_back(row);
  }
  return q;
}

std::vector<std::vector<size_t>> strong_solvability_witnesses(const HomogeneousSphericalDatum& d) {
  auto fc = full_color_set(d);
  auto K = values_on_sigma(d, fc);
  long total = static_cast<long>(fc.colors.size());
  long k = total - d.rs.rank();
  std::vector<std::vector<size_t>> out;
  if (k < 0 || k > static_cast<long>(d.colors.size())) return out;
  std::vector<std::vector<size_t>> subsets;
  combinations(d.colors.size(), static_cast<size_t>(k), subsets);
  for (const auto& sub : subsets)
    if (positive_combination(K, sub, std::vector<Rat>(d.sigma.size(), 1))) out.push_back(sub);
  return out;
}

std::vector<std::vector<size_t>> strong_solvability_witnesses(const SphericalSystem& s) {
  return strong_solvability_witnesses(s.datum());
}

SphericalSystem spherical_closure_invariants(const HomogeneousSphericalDatum& d) {
  SphericalSystem s;
  s.rs = d.rs;
  s.pi_p = d.pi_p;
  size_t n = d.rs.rank();
  std::vector<Vec> bar;
  for (const auto& sg : d.sigma) {
    Vec b = sg;
    if (simple_index(d.rs, sg) < 0) {
      Vec two = scale(2, sg);
      if (find_spherical_root(d.rs, two) && check_compatibility(d.rs, d.pi_p, two)) b = two;
    }
    bar.push_back(b);
    s.sigma.push_back(Vec(b.begin(), b.begin() + n));
  }
  for (const auto& k : d.colors) {
    Vec row;
    for (const auto& b : bar) row.push_back(d.kappa(k, b));
    s.colors.push_back(row);
  }
  return s;
}

}  // namespace spherica
