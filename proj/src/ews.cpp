#include "spherica/ews.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherica {

namespace {

Vec unit(size_t n, size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

HomogeneousSphericalDatum EWSInvariants::datum() const {
  HomogeneousSphericalDatum d;
  d.rs = rs;
  d.central_rank = central_rank;
  d.lattice = lattice;
  d.pi_p = pi_p;
  d.sigma = sigma_detected;
  for (const auto& c : colors)
    if (c.type == ColorType::a) d.colors.push_back(c.kappa);
  return d;
}

EWSInvariants invariants_from_ews(const EWSGenerators& g) {
  size_t n = g.rs.rank(), c = g.central_rank, nd = g.lambda.size();
  size_t k = g.character_group.generators();
  const auto& rel = g.character_group.relations();
  if (g.chi.size() != nd || g.central.size() != c)
    throw std::invalid_argument("generator lists differ in length");

  // Freeness: no integer relation among the pairs and the central block.
  {
    std::vector<Vec> rows;
    for (size_t i = 0; i < nd; ++i) rows.push_back(concat(concat(g.lambda[i], zero_vec(c)), g.chi[i]));
    for (size_t j = 0; j < c; ++j) rows.push_back(concat(concat(zero_vec(n), unit(c, j)), scale(-1, g.central[j])));
    for (const auto& r : rel) rows.push_back(concat(zero_vec(n + c), r));
    if (!rows.empty())
      for (const auto& y : left_kernel(IntMatrix::from_rows(rows, n + c + k))) {
        Vec head(y.begin(), y.begin() + nd + c);
        if (!is_zero(head)) throw std::invalid_argument("generators are not free: relation " + vec_to_string(head));
      }
  }

  // Lambda: (sum c_D lambda_D + nu) over (c, nu) with sum c_D chi_D - nu_H = 0.
  std::vector<Vec> rows;
  for (const auto& x : g.chi) rows.push_back(x);
  for (const auto& x : g.central) rows.push_back(scale(-1, x));
  for (const auto& r : rel) rows.push_back(r);
  std::vector<Vec> coeffs, mus;
  if (!rows.empty())
    for (const auto& y : left_kernel(IntMatrix::from_rows(rows, k))) {
      Vec cf(y.begin(), y.begin() + nd + c);
      Vec mu = zero_vec(n + c);
      for (size_t i = 0; i < nd; ++i)
        for (size_t a = 0; a < n; ++a) mu[a] += cf[i] * g.lambda[i][a];
      for (size_t j = 0; j < c; ++j) mu[n + j] = cf[nd + j];
      coeffs.push_back(cf);
      mus.push_back(mu);
    }

  EWSInvariants out;
  out.rs = g.rs;
  out.central_rank = c;
  out.lattice = Sublattice::generated_by(mus, n + c);
  std::vector<Vec> kappa(nd);
  for (const auto& b : out.lattice.basis()) {
    auto x = solve_left(mus, b, n + c);
    if (!x) throw std::logic_error("lattice basis outside the span");
    for (size_t i = 0; i < nd; ++i) {
      Int v = 0;
      for (size_t t = 0; t < x->size(); ++t) v += (*x)[t] * coeffs[t][i];
      kappa[i].push_back(v);
    }
  }

  std::vector<std::vector<size_t>> carriers(n);
  for (size_t i = 0; i < nd; ++i)
    for (size_t a = 0; a < n; ++a)
      if (g.lambda[i][a] > 0) carriers[a].push_back(i);
  std::vector<bool> in_sigma(n, false), in_double(n, false);
  for (size_t a = 0; a < n; ++a) {
    if (carriers[a].empty()) out.pi_p.push_back(static_cast<int>(a));
    if (carriers[a].size() == 2) in_sigma[a] = true;
    for (size_t i : carriers[a])
      if (g.lambda[i] == scale(2, unit(n, a))) in_double[a] = true;
  }
  for (size_t a = 0; a < n; ++a) {
    if (in_sigma[a]) out.sigma_detected.push_back(simple_weight(g.rs, static_cast<int>(a), c));
    if (in_double[a]) out.sigma_detected.push_back(scale(2, simple_weight(g.rs, static_cast<int>(a), c)));
  }
  for (size_t i = 0; i < nd; ++i) {
    EWSColor col{ColorType::b, {}, g.lambda[i], g.chi[i], kappa[i]};
    for (size_t a = 0; a < n; ++a)
      if (g.lambda[i][a] > 0) {
        col.simple.push_back(static_cast<int>(a));
        if (in_sigma[a]) col.type = ColorType::a;
        else if (in_double[a]) col.type = ColorType::a_prime;
      }
    out.colors.push_back(col);
  }
  return out;
}

CharacterGroup character_group_from_hsd(const HomogeneousSphericalDatum& d) {
  CharacterGroup out;
  out.colors = full_color_set(d);
  size_t nd = out.colors.colors.size(), c = d.central_rank, n = d.rs.rank();
  std::vector<Vec> rel;
  const auto& basis = d.lattice.basis();
  for (size_t j = 0; j < basis.size(); ++j) {
    Vec v = zero_vec(nd + c);
    for (size_t i = 0; i < nd; ++i) v[i] = out.colors.colors[i].kappa[j];
    for (size_t q = 0; q < c; ++q) v[nd + q] = -basis[j][n + q];
    rel.push_back(v);
  }
  out.group = FgAbelianGroup(nd + c, rel);
  return out;
}

std::vector<Vec> lambda_d_of_colors(const RootSystem& rs, const FullColorSet& fc) {
  std::vector<Vec> out;
  for (const auto& col : fc.colors) {
    Vec l = zero_vec(rs.rank());
    for (int a : col.simple) l[a] += col.type == ColorType::a_prime ? 2 : 1;
    out.push_back(l);
  }
  return out;
}

std::vector<Vec> lambda_d_of_colors(const SphericalSystem& s) { return lambda_d_of_colors(s.rs, full_color_set(s)); }

EWSGenerators ews_from_hsd(const HomogeneousSphericalDatum& d) {
  auto cg = character_group_from_hsd(d);
  size_t nd = cg.colors.colors.size(), c = d.central_rank;
  EWSGenerators g;
  g.rs = d.rs;
  g.central_rank = c;
  g.character_group = cg.group;
  g.lambda = lambda_d_of_colors(d.rs, cg.colors);
  for (size_t i = 0; i < nd; ++i) g.chi.push_back(unit(nd + c, i));
  for (size_t q = 0; q < c; ++q) g.central.push_back(unit(nd + c, nd + q));
  return g;
}

EWSGenerators ews_generators_from_ars(const ExtendedARSSet& e) {
  auto rep = validate_extended(e);
  if (!rep.ok()) throw std::invalid_argument("invalid extended ARS-set: " + rep.text());
  const RootSystem& rs = e.ars.rs;
  size_t n = rs.rank(), c = e.central_rank;
  auto ars = expand_ars(e.ars);
  EWSGenerators g;
  g.rs = rs;
  g.central_rank = c;
  g.character_group = FgAbelianGroup(n + c, e.ker_tau.basis());
  for (size_t a = 0; a < n; ++a) {
    g.lambda.push_back(unit(n, a));
    g.chi.push_back(scale(-1, unit(n + c, a)));
  }
  for (size_t p = 0; p < ars.phi_count; ++p) {
    Vec lam = zero_vec(n);
    Vec phi;
    for (size_t i = 0; i < ars.psi.size(); ++i) {
      if (ars.phi[i] != p) continue;
      lam[ars.pi[i]] = 1;
      if (phi.empty()) phi = weight_of(rs, ars.psi[i], c);
    }
    g.lambda.push_back(lam);
    g.chi.push_back(sub(phi, concat(lam, zero_vec(c))));
  }
  for (size_t q = 0; q < c; ++q) g.central.push_back(unit(n + c, n + q));
  return g;
}

}  // namespace spherica
