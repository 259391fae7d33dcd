#pragma once
// Independent reference implementations used only by tests.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using I = __int128;
using Row = std::vector<long long>;
using Mat = std::vector<Row>;

inline I iabs(I x) { return x < 0 ? -x : x; }

inline I igcd(I a, I b) {
  a = iabs(a);
  b = iabs(b);
  while (b) {
    I t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline I floordiv(I a, I b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Leibniz-free cofactor determinant, fine for size <= 4.
inline I det(const std::vector<std::vector<I>>& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  I s = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<I>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<I> r;
      for (size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      sub.push_back(r);
    }
    I c = m[0][j] * det(sub);
    s += (j % 2 ? -c : c);
  }
  return s;
}

inline void subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
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

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
inline Row invariant_factors(const Mat& m) {
  size_t r = m.size(), c = r ? m[0].size() : 0, lim = std::min(r, c);
  Row out;
  I prev = 1;
  bool dead = false;
  for (size_t k = 1; k <= lim; ++k) {
    I g = 0;
    if (!dead) {
      std::vector<std::vector<size_t>> rs, cs;
      subsets(r, k, rs);
      subsets(c, k, cs);
      for (auto& ri : rs)
        for (auto& ci : cs) {
          std::vector<std::vector<I>> sub(k, std::vector<I>(k));
          for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
          g = igcd(g, det(sub));
        }
    }
    if (g == 0) {
      dead = true;
      out.push_back(0);
      continue;
    }
    out.push_back(static_cast<long long>(g / prev));
    prev = g;
  }
  return out;
}

// Row echelon canonical form via 2x2 extended-gcd row combinations.
inline Mat hnf(const Mat& m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<I>> h(rows, std::vector<I>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) h[i][j] = m[i][j];
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    for (size_t i = r + 1; i < rows; ++i) {
      if (h[i][c] == 0) continue;
      I a = h[r][c], b = h[i][c];
      // extended Euclid on (a, b)
      I x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
      while (bb != 0) {
        I q = aa / bb, t;
        t = aa - q * bb; aa = bb; bb = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
      }
      I g = aa;  // g = x0*a + y0*b
      std::vector<I> nr(cols), ni(cols);
      for (size_t j = 0; j < cols; ++j) {
        nr[j] = x0 * h[r][j] + y0 * h[i][j];
        ni[j] = (-b / g) * h[r][j] + (a / g) * h[i][j];
      }
      h[r] = nr;
      h[i] = ni;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0)
      for (auto& x : h[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      I q = floordiv(h[i][c], h[r][c]);
      for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
    }
    ++r;
  }
  Mat out;
  for (size_t i = 0; i < r; ++i) {
    Row row;
    for (auto x : h[i]) row.push_back(static_cast<long long>(x));
    out.push_back(row);
  }
  return out;
}

// All coefficient vectors in [-box, box]^k with c * basis == v.
inline std::vector<Row> combos(const Mat& basis, const Row& v, int box) {
  std::vector<Row> hits;
  size_t k = basis.size(), n = v.size();
  Row c(k, -box);
  if (k == 0) {
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) hits.push_back({});
    return hits;
  }
  while (true) {
    bool eq = true;
    for (size_t j = 0; j < n && eq; ++j) {
      long long s = 0;
      for (size_t i = 0; i < k; ++i) s += c[i] * basis[i][j];
      eq = s == v[j];
    }
    if (eq) hits.push_back(c);
    size_t p = 0;
    while (p < k && c[p] == box) c[p++] = -box;
    if (p == k) break;
    ++c[p];
  }
  return hits;
}

inline Mat random_matrix(std::mt19937_64& rng, size_t r, size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, Row(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

}  // namespace oracle
