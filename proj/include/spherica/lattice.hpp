#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace spherica {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

Vec to_vec(const std::vector<int>& v);
Vec zero_vec(size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
Int content(const Vec& v);  // gcd of entries, 0 for the zero vector
Vec primitive(const Vec& v);
std::string vec_to_string(const Vec& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Vec row(size_t i) const;
  std::vector<Vec> row_list() const;
  void set_row(size_t i, const Vec& v);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  // row i += c * row j
  void add_row(size_t i, size_t j, const Int& c);
  void add_col(size_t i, size_t j, const Int& c);
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

Int determinant(const IntMatrix& m);
Vec row_times(const Vec& x, const IntMatrix& m);

// Row echelon form: pivot columns strictly increase, pivots positive,
// entries above a pivot lie in [0, pivot), zero rows last.
// transform * m == hnf with transform unimodular.
struct HnfResult {
  IntMatrix hnf;
  IntMatrix transform;
  size_t rank = 0;
};
HnfResult hermite(const IntMatrix& m);

// u * m * v == snf; diagonal d_1 | d_2 | ... with d_i >= 0.
struct SnfResult {
  IntMatrix snf;
  IntMatrix u, v;
  size_t rank = 0;
};
SnfResult smith(const IntMatrix& m);

struct NormalForms {
  IntMatrix hnf;
  IntMatrix snf;
  IntMatrix u, v;
};
NormalForms hnf_snf(const IntMatrix& m);

// Exact rational rank and solving.
size_t rank_q(const std::vector<Vec>& rows, size_t cols);
// x with x * rows == target, if one exists over Q (rows independent or not).
std::optional<QVec> solve_left_q(const std::vector<Vec>& rows, const Vec& target);
// Some integer x with x * rows == target.
std::optional<Vec> solve_left(const std::vector<Vec>& rows, const Vec& target, size_t cols);
// Basis of {y : y * m == 0}.
std::vector<Vec> left_kernel(const IntMatrix& m);

class Sublattice {
 public:
  Sublattice() = default;
  explicit Sublattice(size_t ambient) : n_(ambient) {}
  static Sublattice generated_by(const std::vector<Vec>& gens, size_t ambient);
  static Sublattice full(size_t ambient);

  size_t ambient() const { return n_; }
  size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  // Coordinates with respect to the HNF basis.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Sublattice& o) const;
  bool operator==(const Sublattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

  Sublattice operator+(const Sublattice& o) const;
  Sublattice intersect(const Sublattice& o) const;
  // Saturation inside the ambient lattice.
  Sublattice saturation() const;

 private:
  size_t n_ = 0;
  std::vector<Vec> basis_;
};

std::optional<Vec> solve_membership(const Sublattice& l, const Vec& v);

// Z^k modulo a subgroup of relations.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(size_t generators, const std::vector<Vec>& relations);

  size_t generators() const { return k_; }
  const std::vector<Vec>& relations() const { return relations_; }
  // Invariant factors > 1 followed by the free rank.
  const std::vector<Int>& torsion() const { return torsion_; }
  size_t free_rank() const { return free_rank_; }
  // Residues for the torsion factors, then free coordinates.
  Vec reduce(const Vec& v) const;
  bool equal(const Vec& a, const Vec& b) const { return reduce(a) == reduce(b); }
  bool is_trivial(const Vec& v) const { return is_zero(reduce(v)); }
  Vec lift(const Vec& normal_form) const;
  std::string describe() const;

 private:
  size_t k_ = 0;
  std::vector<Vec> relations_;
  std::vector<Int> diag_;  // full diagonal of the SNF, length k (zeros for free part)
  std::vector<Int> torsion_;
  size_t free_rank_ = 0;
  IntMatrix v_, v_inv_;
};

FgAbelianGroup quotient_group(size_t ambient, const Sublattice& relations);

}  // namespace spherica
