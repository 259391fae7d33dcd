#include "spherica/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spherica {

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Vec to_vec(const std::vector<int>& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

Vec zero_vec(size_t n) { return Vec(n, 0); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int content(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Vec primitive(const Vec& v) {
  Int g = content(v);
  if (g == 0) return v;
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec IntMatrix::row(size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<Vec> IntMatrix::row_list() const {
  std::vector<Vec> r;
  for (size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

void IntMatrix::set_row(size_t i, const Vec& v) {
  for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix p(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
    }
  return p;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(size_t i, size_t j, const Int& c) {
  if (c == 0) return;
  for (size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col(size_t i, size_t j, const Int& c) {
  if (c == 0) return;
  for (size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

std::string IntMatrix::str() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += vec_to_string(row(i));
  }
  return s + "]";
}

Vec row_times(const Vec& x, const IntMatrix& m) {
  Vec r(m.cols(), 0);
  for (size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

HnfResult hermite(const IntMatrix& m) {
  HnfResult r{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = r.hnf;
  IntMatrix& t = r.transform;
  size_t row = 0;
  for (size_t c = 0; c < h.cols() && row < h.rows(); ++c) {
    while (true) {
      size_t best = h.rows();
      for (size_t i = row; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      t.swap_rows(row, best);
      bool clean = true;
      for (size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = tdiv(h(i, c), h(row, c));
        h.add_row(i, row, -q);
        t.add_row(i, row, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) {
      for (size_t j = 0; j < h.cols(); ++j) h(row, j) = -h(row, j);
      for (size_t j = 0; j < t.cols(); ++j) t(row, j) = -t(row, j);
    }
    for (size_t i = 0; i < row; ++i) {
      Int q = fdiv(h(i, c), h(row, c));
      h.add_row(i, row, -q);
      t.add_row(i, row, -q);
    }
    ++row;
  }
  r.rank = row;
  return r;
}

SnfResult smith(const IntMatrix& m) {
  SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = r.snf;
  size_t lim = std::min(d.rows(), d.cols());
  size_t t = 0;
  for (; t < lim; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    size_t bi = d.rows(), bj = 0;
    for (size_t i = t; i < d.rows(); ++i)
      for (size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == d.rows()) break;
    d.swap_rows(t, bi);
    r.u.swap_rows(t, bi);
    d.swap_cols(t, bj);
    r.v.swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = tdiv(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        r.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = tdiv(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        r.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        size_t pi = t, pj = t;
        for (size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(pi, pj))) { pi = i; pj = t; }
        for (size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(pi, pj))) { pi = t; pj = j; }
        d.swap_rows(t, pi);
        r.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        r.v.swap_cols(t, pj);
        continue;
      }
      size_t bad = d.rows();
      for (size_t i = t + 1; i < d.rows() && bad == d.rows(); ++i)
        for (size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == d.rows()) break;
      d.add_row(t, bad, 1);
      r.u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (size_t j = 0; j < d.cols(); ++j) d(t, j) = -d(t, j);
      for (size_t j = 0; j < r.u.cols(); ++j) r.u(t, j) = -r.u(t, j);
    }
  }
  r.rank = t;
  return r;
}

NormalForms hnf_snf(const IntMatrix& m) {
  auto s = smith(m);
  return {hermite(m).hnf, s.snf, s.u, s.v};
}

namespace {

// Gaussian elimination on an augmented rational matrix; returns pivot columns.
std::vector<size_t> eliminate(std::vector<QVec>& a, size_t cols) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < a.size(); ++c) {
    size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rat inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

}  // namespace

size_t rank_q(const std::vector<Vec>& rows, size_t cols) {
  std::vector<QVec> a;
  for (const auto& r : rows) {
    QVec q(cols);
    for (size_t j = 0; j < cols; ++j) q[j] = r[j];
    a.push_back(q);
  }
  return eliminate(a, cols).size();
}

std::optional<QVec> solve_left_q(const std::vector<Vec>& rows, const Vec& target) {
  size_t k = rows.size(), n = target.size();
  // Columns: unknowns x_1..x_k, then the right-hand side.
  std::vector<QVec> a(n, QVec(k + 1));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < k; ++i) a[j][i] = rows[i][j];
    a[j][k] = target[j];
  }
  auto piv = eliminate(a, k);
  for (size_t i = piv.size(); i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  QVec x(k, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][k];
  return x;
}

namespace {

// y with y * h == target for h in echelon form with `rank` nonzero rows.
std::optional<Vec> echelon_solve(const IntMatrix& h, size_t rank, Vec target) {
  Vec y(rank, 0);
  for (size_t i = 0; i < rank; ++i) {
    size_t p = 0;
    while (h(i, p) == 0) ++p;
    if (target[p] % h(i, p) != 0) return std::nullopt;
    y[i] = target[p] / h(i, p);
    for (size_t j = p; j < h.cols(); ++j) target[j] -= y[i] * h(i, j);
  }
  if (!is_zero(target)) return std::nullopt;
  return y;
}

}  // namespace

std::optional<Vec> solve_left(const std::vector<Vec>& rows, const Vec& target, size_t cols) {
  if (rows.empty()) {
    if (is_zero(target)) return Vec{};
    return std::nullopt;
  }
  auto hr = hermite(IntMatrix::from_rows(rows, cols));
  auto y = echelon_solve(hr.hnf, hr.rank, target);
  if (!y) return std::nullopt;
  Vec x(rows.size(), 0);
  for (size_t i = 0; i < hr.rank; ++i)
    for (size_t j = 0; j < rows.size(); ++j) x[j] += (*y)[i] * hr.transform(i, j);
  return x;
}

std::vector<Vec> left_kernel(const IntMatrix& m) {
  auto hr = hermite(m);
  std::vector<Vec> k;
  for (size_t i = hr.rank; i < m.rows(); ++i) k.push_back(hr.transform.row(i));
  return k;
}

Sublattice Sublattice::generated_by(const std::vector<Vec>& gens, size_t ambient) {
  Sublattice l(ambient);
  if (gens.empty()) return l;
  auto hr = hermite(IntMatrix::from_rows(gens, ambient));
  for (size_t i = 0; i < hr.rank; ++i) l.basis_.push_back(hr.hnf.row(i));
  return l;
}

Sublattice Sublattice::full(size_t ambient) {
  return generated_by(IntMatrix::identity(ambient).row_list(), ambient);
}

std::optional<Vec> Sublattice::coordinates(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector outside the ambient lattice");
  if (basis_.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  return echelon_solve(IntMatrix::from_rows(basis_, n_), basis_.size(), v);
}

bool Sublattice::contains(const Sublattice& o) const {
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

Sublattice Sublattice::operator+(const Sublattice& o) const {
  auto g = basis_;
  g.insert(g.end(), o.basis_.begin(), o.basis_.end());
  return generated_by(g, n_);
}

Sublattice Sublattice::intersect(const Sublattice& o) const {
  if (basis_.empty() || o.basis_.empty()) return Sublattice(n_);
  std::vector<Vec> stacked = basis_;
  for (const auto& b : o.basis_) stacked.push_back(scale(-1, b));
  auto ker = left_kernel(IntMatrix::from_rows(stacked, n_));
  std::vector<Vec> gens;
  for (const auto& k : ker) {
    Vec x = zero_vec(n_);
    for (size_t i = 0; i < basis_.size(); ++i) x = add(x, scale(k[i], basis_[i]));
    gens.push_back(x);
  }
  return generated_by(gens, n_);
}

Sublattice Sublattice::saturation() const {
  if (basis_.empty()) return *this;
  // Orthogonal complement of the orthogonal complement.
  auto perp = left_kernel(IntMatrix::from_rows(basis_, n_).transpose());
  if (perp.empty()) return full(n_);
  IntMatrix cols(n_, perp.size());
  for (size_t j = 0; j < perp.size(); ++j)
    for (size_t i = 0; i < n_; ++i) cols(i, j) = perp[j][i];
  return generated_by(left_kernel(cols), n_);
}

std::optional<Vec> solve_membership(const Sublattice& l, const Vec& v) { return l.coordinates(v); }

FgAbelianGroup::FgAbelianGroup(size_t generators, const std::vector<Vec>& relations)
    : k_(generators), relations_(relations) {
  IntMatrix r = IntMatrix::from_rows(relations, k_);
  auto s = smith(r);
  diag_.assign(k_, 0);
  for (size_t i = 0; i < std::min(r.rows(), k_); ++i) diag_[i] = s.snf(i, i);
  for (const auto& d : diag_) {
    if (d > 1) torsion_.push_back(d);
    if (d == 0) ++free_rank_;
  }
  v_ = s.v;
  v_inv_ = hermite(v_).transform;
}

Vec FgAbelianGroup::reduce(const Vec& v) const {
  if (v.size() != k_) throw std::invalid_argument("element outside the presentation");
  Vec w = row_times(v, v_);
  Vec out;
  for (size_t i = 0; i < k_; ++i)
    if (diag_[i] > 1) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), diag_[i].get_mpz_t());
      out.push_back(r);
    }
  for (size_t i = 0; i < k_; ++i)
    if (diag_[i] == 0) out.push_back(w[i]);
  return out;
}

Vec FgAbelianGroup::lift(const Vec& nf) const {
  Vec w(k_, 0);
  size_t p = 0;
  for (size_t i = 0; i < k_; ++i)
    if (diag_[i] > 1) w[i] = nf[p++];
  for (size_t i = 0; i < k_; ++i)
    if (diag_[i] == 0) w[i] = nf[p++];
  return row_times(w, v_inv_);
}

std::string FgAbelianGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank_ > 0 || first) os << (first ? "" : " + ") << "Z^" << free_rank_;
  return os.str();
}

FgAbelianGroup quotient_group(size_t ambient, const Sublattice& relations) {
  return FgAbelianGroup(ambient, relations.basis());
}

}  // namespace spherica
