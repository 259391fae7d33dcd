#include "spherica/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>

namespace spherica {

int default_rank_bound() {
  if (const char* v = std::getenv("SPHERICA_RANK_BOUND")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
    }
  }
  return 4;
}

namespace {

void check_bound(const RootSystem& rs, const EnumerateOptions& opt) {
  if (rs.rank() > opt.rank_bound)
    throw RankBoundError("rank " + std::to_string(rs.rank()) + " exceeds the enumeration bound " +
                         std::to_string(opt.rank_bound));
}

// Backtracking over the off-diagonal entries among the support, row-major.
class Search {
 public:
  Search(const RootSystem& rs, const std::vector<int>& support) : rs_(rs), s_(support) {
    int n = rs.rank();
    eta_.assign(n, std::vector<int>(n, 0));
    set_.assign(n, std::vector<bool>(n, true));
    for (int a : s_) {
      eta_[a][a] = 1;
      for (int b : s_)
        if (a != b) {
          set_[a][b] = false;
          cells_.push_back({a, b});
        }
    }
  }

  std::vector<int> values(size_t cell) const {
    auto [a, b] = cells_[cell];
    std::vector<int> out;
    for (int v = std::max(-3, rs_.cartan(a, b)); v <= 1; ++v) out.push_back(v);
    return out;
  }

  size_t cells() const { return cells_.size(); }

  // Runs the search with the first `fixed` cells preset.
  void run(const std::vector<int>& prefix, std::vector<AdmissibleMap>& out) {
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (!assign(i, prefix[i])) return;
    }
    go(prefix.size(), out);
  }

 private:
  bool known(int a, int b) const { return set_[a][b]; }

  bool consistent(int i, int j) const {
    int v = eta_[i][j];
    if (v < 0 && known(j, i) && eta_[j][i] != 0) return false;
    if (known(j, i) && eta_[j][i] < 0 && v != 0) return false;
    int n = rs_.rank();
    // AM3 with (i, j) as the unit entry.
    if (v == 1)
      for (int c = 0; c < n; ++c)
        if (known(i, c) && known(j, c) && eta_[i][c] != eta_[j][c]) return false;
    // AM3 with (i, j) as (a, c) or (b, c).
    for (int b = 0; b < n; ++b) {
      if (known(i, b) && eta_[i][b] == 1 && known(b, j) && eta_[b][j] != v) return false;
      if (known(b, i) && eta_[b][i] == 1 && known(b, j) && eta_[b][j] != v) return false;
    }
    return true;
  }

  bool assign(size_t cell, int v) {
    auto [a, b] = cells_[cell];
    eta_[a][b] = v;
    set_[a][b] = true;
    if (consistent(a, b)) return true;
    set_[a][b] = false;
    return false;
  }

  void go(size_t cell, std::vector<AdmissibleMap>& out) {
    if (cell == cells_.size()) {
      AdmissibleMap m{rs_, eta_};
      if (validate_admissible(m).ok()) out.push_back(m);
      return;
    }
    auto [a, b] = cells_[cell];
    for (int v : values(cell)) {
      if (!assign(cell, v)) continue;
      go(cell + 1, out);
      set_[a][b] = false;
    }
    eta_[a][b] = 0;
  }

  const RootSystem& rs_;
  std::vector<int> s_;
  std::vector<std::vector<int>> eta_;
  std::vector<std::vector<bool>> set_;
  std::vector<std::pair<int, int>> cells_;
};

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return out;
}

using Key = std::pair<std::vector<Vec>, std::vector<Vec>>;

// Classes ordered by their smallest associated simple root, roots likewise.
std::vector<std::vector<RootVec>> ordered_classes(const ActiveRootSystem& a) {
  std::vector<std::vector<std::pair<int, RootVec>>> by(a.phi_count);
  for (size_t i = 0; i < a.psi.size(); ++i) by[a.phi[i]].push_back({a.pi[i], a.psi[i]});
  for (auto& c : by) std::sort(c.begin(), c.end());
  std::sort(by.begin(), by.end());
  std::vector<std::vector<RootVec>> out;
  for (const auto& c : by) {
    out.emplace_back();
    for (const auto& [p, r] : c) out.back().push_back(r);
  }
  return out;
}

std::vector<ClassificationRecord> group(const std::vector<AdmissibleMap>& maps) {
  std::map<Key, SphericalSystem> systems;
  std::vector<Key> order;
  for (const auto& m : maps) {
    auto c = canonical(spherical_system_of_admissible(m).system);
    Key k{c.sigma, c.colors};
    if (systems.emplace(k, c).second) order.push_back(k);
  }
  std::vector<ClassificationRecord> out;
  for (const auto& k : order) {
    ClassificationRecord r;
    r.system = systems[k];
    for (const auto& w : strong_solvability_witnesses(r.system)) {
      auto eta = admissible_from_system(r.system, w);
      r.dscs.push_back({w, eta, ordered_classes(ars_from_admissible(eta))});
    }
    out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const ClassificationRecord& x, const ClassificationRecord& y) {
    if (x.system.colors.size() != y.system.colors.size()) return x.system.colors.size() > y.system.colors.size();
    if (x.dscs.size() != y.dscs.size()) return x.dscs.size() > y.dscs.size();
    return std::make_pair(x.system.sigma, x.system.colors) < std::make_pair(y.system.sigma, y.system.colors);
  });
  return out;
}

}  // namespace

std::vector<AdmissibleMap> enumerate_admissible_on(const RootSystem& rs, const std::vector<int>& support,
                                                   const EnumerateOptions& opt) {
  check_bound(rs, opt);
  Search probe(rs, support);
  std::vector<AdmissibleMap> out;
  if (!opt.parallel || probe.cells() == 0) {
    probe.run({}, out);
    return out;
  }
  // One task per value of the first cell; results concatenated in order.
  std::vector<std::future<std::vector<AdmissibleMap>>> tasks;
  for (int v : probe.values(0))
    tasks.push_back(std::async(std::launch::async, [&rs, &support, v] {
      Search s(rs, support);
      std::vector<AdmissibleMap> part;
      s.run({v}, part);
      return part;
    }));
  for (auto& t : tasks) {
    auto part = t.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<AdmissibleMap> enumerate_admissible(const RootSystem& rs, bool cuspidal_only,
                                                const EnumerateOptions& opt) {
  check_bound(rs, opt);
  if (cuspidal_only) {
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    return enumerate_admissible_on(rs, all, opt);
  }
  std::vector<AdmissibleMap> out;
  for (const auto& s : subsets(rs.rank())) {
    auto part = enumerate_admissible_on(rs, s, opt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<ClassificationRecord> enumerate_cuspidal_systems(const RootSystem& rs, const EnumerateOptions& opt) {
  return group(enumerate_admissible(rs, true, opt));
}

std::vector<ClassificationRecord> enumerate_systems(const RootSystem& rs, const EnumerateOptions& opt) {
  std::vector<ClassificationRecord> out;
  for (const auto& s : subsets(rs.rank())) {
    auto part = group(enumerate_admissible_on(rs, s, opt));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace spherica
