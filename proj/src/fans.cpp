#include "spherica/fans.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "spherica/lp.hpp"

namespace spherica {

using Rel = LinearProgram::Rel;

Cone::Cone(size_t ambient, const std::vector<Vec>& generators) : n_(ambient) {
  for (const auto& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("cone generator of wrong length");
    if (is_zero(g)) continue;
    Vec p = primitive(g);
    if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(p);
  }
}

size_t Cone::dim() const { return rank_q(gens_, n_); }

bool Cone::contains(const Vec& point) const {
  LinearProgram lp;
  for (size_t i = 0; i < gens_.size(); ++i) lp.add_var();
  for (size_t j = 0; j < n_; ++j) {
    QVec row(gens_.size());
    for (size_t i = 0; i < gens_.size(); ++i) row[i] = gens_[i][j];
    lp.add(row, Rel::EQ, Rat(point[j]));
  }
  return lp.feasible_point().has_value();
}

namespace {

// A functional xi with xi = 0 on `zero`, xi >= 1 on `pos` and xi <= -1 on `neg`.
std::optional<QVec> separating(size_t n, const std::vector<Vec>& zero, const std::vector<Vec>& pos,
                               const std::vector<Vec>& neg) {
  LinearProgram lp;
  for (size_t j = 0; j < n; ++j) lp.add_var(std::nullopt);
  for (const auto& g : zero) lp.add(g, Rel::EQ, 0);
  for (const auto& g : pos) lp.add(g, Rel::GE, 1);
  for (const auto& g : neg) lp.add(g, Rel::LE, -1);
  return lp.feasible_point();
}

bool strictly_convex(const std::vector<Vec>& gens, size_t n) {
  if (gens.empty()) return true;
  LinearProgram lp;
  for (size_t i = 0; i < gens.size(); ++i) lp.add_var();
  for (size_t j = 0; j < n; ++j) {
    QVec row(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) row[i] = gens[i][j];
    lp.add(row, Rel::EQ, 0);
  }
  lp.add(QVec(gens.size(), 1), Rel::EQ, 1);
  return !lp.feasible_point();
}

std::vector<std::vector<size_t>> face_sets(const Cone& c) {
  const auto& g = c.generators();
  size_t k = g.size();
  std::vector<std::vector<size_t>> out;
  if (k > 20) throw std::invalid_argument("cone has too many generators for face enumeration");
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    std::vector<Vec> zero, pos;
    std::vector<size_t> idx;
    for (size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        zero.push_back(g[i]);
        idx.push_back(i);
      } else {
        pos.push_back(g[i]);
      }
    }
    if (separating(c.ambient(), zero, pos, {})) out.push_back(idx);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<Vec> extremal_rays(const Cone& c) {
  const auto& g = c.generators();
  std::vector<Vec> out;
  for (size_t i = 0; i < g.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    if (!Cone(c.ambient(), others).contains(g[i]) || others.empty()) out.push_back(g[i]);
  }
  return out;
}

ConeReport validate_cone(const Cone& c) {
  ConeReport r;
  const auto& g = c.generators();
  r.strictly_convex = strictly_convex(g, c.ambient());
  r.simplicial = rank_q(g, c.ambient()) == g.size();
  if (r.strictly_convex && r.simplicial) {
    r.regular = true;
    if (!g.empty()) {
      auto s = smith(IntMatrix::from_rows(g, c.ambient()));
      for (size_t i = 0; i < g.size(); ++i)
        if (s.snf(i, i) != 1) r.regular = false;
    }
  }
  if (r.strictly_convex) r.faces = face_sets(c);
  return r;
}

std::vector<std::vector<size_t>> facets(const Cone& c) {
  size_t d = c.dim();
  const auto& g = c.generators();
  std::vector<std::vector<size_t>> out;
  if (d == 0) return out;
  if (rank_q(g, c.ambient()) == g.size()) {
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<size_t> f;
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i) f.push_back(j);
      out.push_back(f);
    }
    return out;
  }
  for (const auto& f : face_sets(c)) {
    std::vector<Vec> sub;
    for (size_t i : f) sub.push_back(g[i]);
    if (rank_q(sub, c.ambient()) + 1 == d) out.push_back(f);
  }
  return out;
}

Cone dual_cone(const Cone& c) {
  size_t n = c.ambient();
  if (c.dim() != n) throw std::invalid_argument("dual_cone needs a full-dimensional cone");
  if (!strictly_convex(c.generators(), n)) throw std::invalid_argument("dual_cone needs a strictly convex cone");
  std::vector<Vec> normals;
  for (const auto& f : facets(c)) {
    std::vector<Vec> sub;
    for (size_t i : f) sub.push_back(c.generators()[i]);
    // The facet spans a hyperplane; its integral normal is a kernel vector.
    IntMatrix cols(n, sub.size());
    for (size_t j = 0; j < sub.size(); ++j)
      for (size_t i = 0; i < n; ++i) cols(i, j) = sub[j][i];
    auto ker = left_kernel(cols);
    if (ker.size() != 1) throw std::logic_error("facet does not span a hyperplane");
    Vec nu = primitive(ker[0]);
    for (const auto& g : c.generators()) {
      Int s = dot(nu, g);
      if (s < 0) {
        nu = scale(-1, nu);
        break;
      }
      if (s > 0) break;
    }
    normals.push_back(nu);
  }
  return Cone(n, normals);
}

std::vector<Vec> Fan::rays() const {
  std::set<Vec> s;
  for (const auto& c : cones_)
    for (const auto& g : c.generators()) s.insert(g);
  return {s.begin(), s.end()};
}

FanReport validate_fan(const Fan& f) {
  FanReport r;
  r.rays = f.rays();
  size_t n = f.ambient();
  std::vector<Cone> cones;
  r.is_fan = true;
  for (const auto& c : f.maximal_cones()) {
    if (!strictly_convex(c.generators(), n)) r.is_fan = false;
    cones.emplace_back(n, extremal_rays(c));
  }
  for (size_t a = 0; a < cones.size() && r.is_fan; ++a)
    for (size_t b = a + 1; b < cones.size() && r.is_fan; ++b) {
      const auto& ga = cones[a].generators();
      const auto& gb = cones[b].generators();
      std::vector<Vec> shared, only_a, only_b;
      for (const auto& g : ga)
        (std::find(gb.begin(), gb.end(), g) != gb.end() ? shared : only_a).push_back(g);
      for (const auto& g : gb)
        if (std::find(ga.begin(), ga.end(), g) == ga.end()) only_b.push_back(g);
      if (separating(n, shared, only_a, only_b)) continue;
      r.is_fan = false;
      // A point of both cones using a non-shared generator of the first.
      LinearProgram lp;
      for (size_t i = 0; i < ga.size() + gb.size(); ++i) lp.add_var();
      for (size_t j = 0; j < n; ++j) {
        QVec row(ga.size() + gb.size());
        for (size_t i = 0; i < ga.size(); ++i) row[i] = ga[i][j];
        for (size_t i = 0; i < gb.size(); ++i) row[ga.size() + i] = -gb[i][j];
        lp.add(row, Rel::EQ, 0);
      }
      QVec use(ga.size() + gb.size(), 0);
      for (size_t i = 0; i < ga.size(); ++i)
        if (std::find(gb.begin(), gb.end(), ga[i]) == gb.end()) use[i] = 1;
      lp.add(use, Rel::GE, 1);
      if (auto p = lp.feasible_point()) {
        QVec pt(n, 0);
        for (size_t i = 0; i < ga.size(); ++i)
          for (size_t j = 0; j < n; ++j) pt[j] += (*p)[i] * ga[i][j];
        r.witness = clear_denominators(pt);
      }
    }
  r.regular = r.is_fan;
  for (const auto& c : cones)
    if (!validate_cone(c).regular) r.regular = false;

  // Completeness: pure of full dimension, every facet in exactly two cones,
  // connected facet-adjacency graph.
  r.complete = r.is_fan && !cones.empty();
  std::map<std::vector<Vec>, std::vector<size_t>> owners;
  for (size_t a = 0; a < cones.size() && r.complete; ++a) {
    if (cones[a].dim() != n) {
      r.complete = false;
      break;
    }
    for (const auto& fct : facets(cones[a])) {
      std::vector<Vec> key;
      for (size_t i : fct) key.push_back(cones[a].generators()[i]);
      std::sort(key.begin(), key.end());
      owners[key].push_back(a);
    }
  }
  if (r.complete && n > 0) {
    std::vector<std::vector<size_t>> adj(cones.size());
    for (const auto& [key, who] : owners) {
      if (who.size() != 2) {
        r.complete = false;
        break;
      }
      adj[who[0]].push_back(who[1]);
      adj[who[1]].push_back(who[0]);
    }
    if (r.complete) {
      std::vector<bool> seen(cones.size(), false);
      std::vector<size_t> st{0};
      seen[0] = true;
      while (!st.empty()) {
        size_t u = st.back();
        st.pop_back();
        for (size_t v : adj[u])
          if (!seen[v]) {
            seen[v] = true;
            st.push_back(v);
          }
      }
      r.complete = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
  }
  return r;
}

std::optional<FanRootWitness> fan_root_check(const Fan& f, const Vec& alpha) {
  std::optional<Vec> hit;
  for (const auto& ray : f.rays()) {
    Int v = dot(ray, alpha);
    if (v == 1) {
      if (hit) return std::nullopt;
      hit = ray;
    } else if (v > 0) {
      return std::nullopt;
    }
  }
  if (!hit) return std::nullopt;
  return FanRootWitness{alpha, *hit};
}

}  // namespace spherica
