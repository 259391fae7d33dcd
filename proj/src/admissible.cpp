#include "spherica/admissible.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spherica {

std::vector<int> AdmissibleMap::support() const {
  std::vector<int> out;
  for (size_t a = 0; a < eta.size(); ++a)
    if (eta[a][a] == 1) out.push_back(static_cast<int>(a));
  return out;
}

AdmissibleMap make_admissible(const RootSystem& rs, const std::vector<std::vector<long>>& eta) {
  AdmissibleMap m{rs, {}};
  for (const auto& row : eta) m.eta.emplace_back(row.begin(), row.end());
  return m;
}

namespace {

std::string pair_name(int a, int b) { return "(α" + std::to_string(a + 1) + ", α" + std::to_string(b + 1) + ")"; }

}  // namespace

ValidationReport validate_admissible(const AdmissibleMap& m) {
  ValidationReport rep;
  for (const char* ax : {"shape", "AM1", "AM2", "AM3", "AM4", "AM5"}) rep.check(ax);
  int n = m.rs.rank();
  if (static_cast<int>(m.eta.size()) != n) {
    rep.fail("shape", "expected " + std::to_string(n) + " rows");
    return rep;
  }
  for (const auto& row : m.eta) {
    if (static_cast<int>(row.size()) != n) {
      rep.fail("shape", "expected " + std::to_string(n) + " columns");
      return rep;
    }
    for (int x : row)
      if (x < -3 || x > 1) rep.fail("shape", "entry " + std::to_string(x) + " outside {-3..1}");
  }
  auto v = [&](int a, int b) { return std::to_string(m(a, b)); };
  for (int a = 0; a < n; ++a) {
    if (m(a, a) != 0 && m(a, a) != 1) rep.fail("AM1", "η" + pair_name(a, a) + " = " + v(a, a));
    if (m(a, a) == 0)
      for (int b = 0; b < n; ++b) {
        if (m(a, b) != 0) rep.fail("AM2", "η" + pair_name(a, b) + " = " + v(a, b) + " with η(α, α) = 0");
        if (b != a && m(b, a) != 0) rep.fail("AM2", "η" + pair_name(b, a) + " = " + v(b, a) + " with η(α, α) = 0");
      }
    for (int b = 0; b < n; ++b) {
      if (m(a, b) == 1)
        for (int c = 0; c < n; ++c)
          if (m(a, c) != m(b, c))
            rep.fail("AM3", "η" + pair_name(a, b) + " = 1 but η" + pair_name(a, c) + " = " + v(a, c) + " ≠ η" +
                                pair_name(b, c) + " = " + v(b, c));
      if (m(a, b) < 0 && m(b, a) != 0)
        rep.fail("AM4", "η" + pair_name(a, b) + " = " + v(a, b) + " and η" + pair_name(b, a) + " = " + v(b, a));
      if (a != b && m(a, b) < m.rs.cartan(a, b))
        rep.fail("AM5", "η" + pair_name(a, b) + " = " + v(a, b) + " < " + std::to_string(m.rs.cartan(a, b)));
    }
  }
  return rep;
}

ValidationReport validate_enriques(const EnriquesBSystem& e) {
  ValidationReport rep;
  for (const char* ax : {"shape", "fan", "a", "b", "pair"}) rep.check(ax);
  int n = e.rs.rank();
  size_t k = e.lattice_basis.size();
  if (static_cast<int>(e.rho.size()) != n || e.fan.ambient() != k) {
    rep.fail("shape", "rho or fan dimension does not match the lattice");
    return rep;
  }
  for (const auto& r : e.rho)
    if (r.size() != k) {
      rep.fail("shape", "rho value of wrong length");
      return rep;
    }
  auto fr = validate_fan(e.fan);
  if (!fr.is_fan) rep.fail("fan", "not a fan");
  if (!fr.complete) rep.fail("fan", "not complete");
  if (!fr.regular) rep.fail("fan", "not regular");

  Sublattice x = Sublattice::generated_by(e.lattice_basis, n);
  if (x.rank() != k) {
    rep.fail("shape", "lattice basis is dependent");
    return rep;
  }
  // alpha in X, written in the given basis.
  std::vector<std::optional<Vec>> coords(n);
  for (int a = 0; a < n; ++a) coords[a] = solve_left(e.lattice_basis, simple_weight(e.rs, a), n);
  auto name = [](int a) { return "α" + std::to_string(a + 1); };
  for (int a = 0; a < n; ++a) {
    if (is_zero(e.rho[a])) continue;
    if (std::find(fr.rays.begin(), fr.rays.end(), e.rho[a]) == fr.rays.end())
      rep.fail("a", "ρ(" + name(a) + ") is not a ray of the fan");
    if (!coords[a]) {
      rep.fail("a", name(a) + " is not in X");
      continue;
    }
    if (dot(e.rho[a], *coords[a]) != 1) rep.fail("a", "<ρ(" + name(a) + "), " + name(a) + "> ≠ 1");
    for (const auto& ray : fr.rays)
      if (ray != e.rho[a] && dot(ray, *coords[a]) > 0)
        rep.fail("a", "ray " + vec_to_string(ray) + " is positive on " + name(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || is_zero(e.rho[b]) || !coords[b]) continue;
      if (dot(e.rho[a], *coords[b]) < e.rs.cartan(a, b))
        rep.fail("b", "<ρ(" + name(a) + "), " + name(b) + "> < <" + name(a) + "^∨, " + name(b) + ">");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !coords[a] || !coords[b]) continue;
      if (dot(e.rho[a], *coords[b]) < 0 && dot(e.rho[b], *coords[a]) != 0)
        rep.fail("pair", "<ρ(" + name(a) + "), " + name(b) + "> < 0 but <ρ(" + name(b) + "), " + name(a) + "> ≠ 0");
    }
  return rep;
}

FanEta build_fan_eta(const AdmissibleMap& m) {
  if (!validate_admissible(m).ok()) throw std::invalid_argument("map is not admissible");
  FanEta out;
  int n = m.rs.rank();
  out.pi_eta = m.support();
  size_t k = out.pi_eta.size();
  std::vector<Vec> rho(n, zero_vec(k));
  for (int a = 0; a < n; ++a)
    for (size_t j = 0; j < k; ++j) rho[a][j] = m(a, out.pi_eta[j]);
  auto dual = [&](size_t j) {
    Vec e = zero_vec(k);
    e[j] = 1;
    return e;
  };

  std::vector<bool> used(k, false);
  while (std::find(used.begin(), used.end(), false) != used.end()) {
    size_t beta = k;
    for (size_t i = 0; i < k && beta == k; ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j)
        if (!used[j]) ok = m(out.pi_eta[i], out.pi_eta[j]) >= 0;
      if (ok) beta = i;
    }
    if (beta == k) throw std::logic_error("no eligible root for the next group");
    std::vector<int> group;
    for (size_t j = 0; j < k; ++j)
      if (!used[j] && m(out.pi_eta[beta], out.pi_eta[j]) == 1) {
        group.push_back(out.pi_eta[j]);
        used[j] = true;
      }
    out.groups.push_back(group);
    out.group_rays.push_back(rho[out.pi_eta[beta]]);
  }

  std::vector<Cone> cones;
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    std::vector<Vec> seen;
    bool injective = true;
    std::vector<int> sub;
    std::vector<Vec> gens;
    for (size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        const Vec& r = rho[out.pi_eta[j]];
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) injective = false;
        seen.push_back(r);
        sub.push_back(out.pi_eta[j]);
        gens.push_back(r);
      } else {
        gens.push_back(scale(-1, dual(j)));
      }
    }
    if (!injective) continue;
    out.injective_subsets.push_back(sub);
    cones.emplace_back(k, gens);
  }
  std::vector<Vec> neg;
  for (size_t j = 0; j < k; ++j) neg.push_back(scale(-1, dual(j)));
  out.c_empty = Cone(k, neg);

  out.system.rs = m.rs;
  for (int a : out.pi_eta) out.system.lattice_basis.push_back(simple_weight(m.rs, a));
  out.system.fan = Fan(k, cones);
  out.system.rho = rho;
  return out;
}

MarkedSystem spherical_system_of_admissible(const AdmissibleMap& m) {
  if (!validate_admissible(m).ok()) throw std::invalid_argument("map is not admissible");
  auto pi = m.support();
  MarkedSystem out;
  out.system.rs = m.rs;
  for (int a : pi) out.system.sigma.push_back(simple_weight(m.rs, a));
  std::vector<Vec> plus;
  for (int a : pi) {
    Vec row;
    for (int b : pi) row.push_back(m(a, b));
    if (std::find(plus.begin(), plus.end(), row) == plus.end()) plus.push_back(row);
  }
  for (size_t i = 0; i < plus.size(); ++i) {
    out.system.colors.push_back(plus[i]);
    out.marked.push_back(i);
  }
  for (int a : pi) {
    Vec row;
    for (int b : pi) row.push_back(m.rs.cartan(a, b) - m(a, b));
    out.system.colors.push_back(row);
  }
  return out;
}

AdmissibleMap admissible_from_system(const SphericalSystem& s, const std::vector<size_t>& dsc) {
  auto sorted = dsc;
  std::sort(sorted.begin(), sorted.end());
  auto ws = strong_solvability_witnesses(s);
  if (std::find(ws.begin(), ws.end(), sorted) == ws.end())
    throw std::invalid_argument("subset is not a strong-solvability witness");
  int n = s.rs.rank();
  AdmissibleMap m{s.rs, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  std::vector<int> idx;
  for (const auto& w : s.sigma) {
    int a = simple_index(s.rs, w);
    if (a < 0) throw std::invalid_argument("strongly solvable system with a non-simple spherical root");
    idx.push_back(a);
  }
  for (size_t i = 0; i < idx.size(); ++i) {
    std::vector<size_t> plus;
    for (size_t d : sorted)
      if (s.colors[d][i] == 1) plus.push_back(d);
    if (plus.size() != 1) throw std::logic_error("D' meets D(alpha) in " + std::to_string(plus.size()) + " colors");
    for (size_t j = 0; j < idx.size(); ++j) m.eta[idx[i]][idx[j]] = static_cast<int>(s.colors[plus[0]][j].get_si());
  }
  return m;
}

}  // namespace spherica
