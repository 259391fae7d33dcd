#include "spherica/lp.hpp"

#include <stdexcept>

namespace spherica {

size_t LinearProgram::add_var(std::optional<Rat> lower) {
  lower_.push_back(lower);
  for (auto& r : rows_) r.push_back(0);
  return lower_.size() - 1;
}

void LinearProgram::add(const QVec& coeffs, Rel rel, const Rat& rhs) {
  if (coeffs.size() != lower_.size()) throw std::invalid_argument("LP row has wrong width");
  rows_.push_back(coeffs);
  rels_.push_back(rel);
  rhs_.push_back(rhs);
}

void LinearProgram::add(const Vec& coeffs, Rel rel, const Rat& rhs) {
  QVec q(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) q[i] = coeffs[i];
  add(q, rel, rhs);
}

std::optional<QVec> LinearProgram::feasible_point() const {
  size_t nv = lower_.size(), m = rows_.size();
  // Columns of the standard form: one per bounded variable, two per free
  // variable, one slack per inequality.
  std::vector<size_t> pos(nv), neg(nv, SIZE_MAX);
  size_t ncol = 0;
  for (size_t v = 0; v < nv; ++v) {
    pos[v] = ncol++;
    if (!lower_[v]) neg[v] = ncol++;
  }
  std::vector<size_t> slack(m, SIZE_MAX);
  for (size_t i = 0; i < m; ++i)
    if (rels_[i] != Rel::EQ) slack[i] = ncol++;

  size_t width = ncol + m + 1;
  std::vector<QVec> t(m, QVec(width, 0));
  for (size_t i = 0; i < m; ++i) {
    Rat b = rhs_[i];
    for (size_t v = 0; v < nv; ++v) {
      const Rat& a = rows_[i][v];
      if (a == 0) continue;
      t[i][pos[v]] = a;
      if (lower_[v]) b -= a * *lower_[v];
      else t[i][neg[v]] = -a;
    }
    if (rels_[i] == Rel::LE) t[i][slack[i]] = 1;
    if (rels_[i] == Rel::GE) t[i][slack[i]] = -1;
    if (b < 0) {
      for (size_t j = 0; j < ncol; ++j) t[i][j] = -t[i][j];
      b = -b;
    }
    t[i][ncol + i] = 1;
    t[i][width - 1] = b;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = ncol + i;
  QVec red(width, 0);
  for (size_t j = 0; j < ncol; ++j)
    for (size_t i = 0; i < m; ++i) red[j] -= t[i][j];
  for (size_t i = 0; i < m; ++i) red[width - 1] -= t[i][width - 1];

  while (true) {
    size_t enter = SIZE_MAX;
    for (size_t j = 0; j < width - 1; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter == SIZE_MAX) break;
    size_t leave = SIZE_MAX;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == SIZE_MAX || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded direction; cannot occur in phase 1
    Rat p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (red[enter] != 0) {
      Rat f = red[enter];
      for (size_t j = 0; j < width; ++j) red[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (red[width - 1] != 0) return std::nullopt;

  QVec col(ncol, 0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < ncol) col[basis[i]] = t[i][width - 1];
    else if (t[i][width - 1] != 0) return std::nullopt;
  QVec x(nv);
  for (size_t v = 0; v < nv; ++v) {
    x[v] = col[pos[v]];
    if (lower_[v]) x[v] += *lower_[v];
    else x[v] -= col[neg[v]];
  }
  return x;
}

Vec clear_denominators(const QVec& v) {
  Int l = 1;
  for (const auto& q : v) l = lcm(l, Int(q.get_den()));
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    out[i] = s.get_num();
  }
  return out;
}

}  // namespace spherica
