#include "spherica/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <stdexcept>

namespace spherica {

int DynkinDiagram::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string DynkinDiagram::name() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].type;
    s += std::to_string(components[i].rank);
  }
  return s;
}

void DynkinDiagram::check() const {
  if (components.empty()) throw std::invalid_argument("empty Dynkin diagram");
  for (const auto& c : components) {
    std::string tag = std::string(1, c.type) + std::to_string(c.rank);
    bool ok = false;
    switch (c.type) {
      case 'A': ok = c.rank >= 1; break;
      case 'B':
      case 'C': ok = c.rank >= 2; break;
      case 'D': ok = c.rank >= 3; break;
      case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
      case 'F': ok = c.rank == 4; break;
      case 'G': ok = c.rank == 2; break;
      default: throw std::invalid_argument("unknown Dynkin type in component " + tag);
    }
    if (!ok) throw std::invalid_argument("invalid type/rank combination: " + tag);
  }
}

DynkinDiagram DynkinDiagram::parse(const std::string& text) {
  static const std::regex token(R"(([A-Za-z])\s*([0-9]+))");
  std::string rest = text;
  for (const char* sep : {"\xC3\x97", "x", "X", "*", "+", ",", " "}) {
    size_t p;
    while ((p = rest.find(sep)) != std::string::npos) rest.replace(p, std::string(sep).size(), "|");
  }
  DynkinDiagram d;
  std::string piece;
  auto flush = [&](const std::string& s) {
    if (s.empty()) return;
    std::smatch m;
    std::string str = s;
    size_t pos = 0;
    while (pos < str.size()) {
      std::string tail = str.substr(pos);
      if (!std::regex_search(tail, m, token) || m.position(0) != 0)
        throw std::invalid_argument("cannot parse Dynkin diagram '" + text + "'");
      char t = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
      d.components.push_back({t, std::stoi(m[2].str())});
      pos += m.length(0);
    }
  };
  for (char ch : rest) {
    if (ch == '|') {
      flush(piece);
      piece.clear();
    } else {
      piece += ch;
    }
  }
  flush(piece);
  d.check();
  return d;
}

ComponentShape component_shape(char type, int r) {
  ComponentShape s;
  s.sq_length.assign(r, 2);
  for (int i = 0; i + 1 < r; ++i) s.edges.push_back({i, i + 1});
  switch (type) {
    case 'A': break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) s.sq_length[i] = 4;
      break;
    case 'C': s.sq_length[r - 1] = 4; break;
    case 'D':
      s.edges.pop_back();
      s.edges.push_back({r - 3, r - 1});
      break;
    case 'E':
      s.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < r; ++i) s.edges.push_back({i, i + 1});
      break;
    case 'F': s.sq_length = {2, 2, 4, 4}; break;
    case 'G': s.sq_length = {2, 6}; break;
    default: throw std::invalid_argument(std::string("unknown Dynkin type ") + type);
  }
  return s;
}

namespace {

void shape_gram(const ComponentShape& s, std::vector<std::vector<int>>& gram, int offset) {
  int r = static_cast<int>(s.sq_length.size());
  for (int i = 0; i < r; ++i) gram[offset + i][offset + i] = s.sq_length[i];
  for (auto [i, j] : s.edges) {
    int v = -std::max(s.sq_length[i], s.sq_length[j]) / 2;
    gram[offset + i][offset + j] = gram[offset + j][offset + i] = v;
  }
}

std::vector<std::vector<int>> cartan_of_gram(const std::vector<std::vector<int>>& g) {
  size_t n = g.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = 2 * g[i][j] / g[i][i];
  return a;
}

}  // namespace

std::vector<std::vector<int>> component_cartan(char type, int rank) {
  std::vector<std::vector<int>> g(rank, std::vector<int>(rank, 0));
  shape_gram(component_shape(type, rank), g, 0);
  return cartan_of_gram(g);
}

RootSystem::RootSystem(DynkinDiagram d) : diagram_(std::move(d)) {
  diagram_.check();
  n_ = diagram_.rank();
  gram_.assign(n_, std::vector<int>(n_, 0));
  int off = 0;
  for (const auto& c : diagram_.components) {
    shape_gram(component_shape(c.type, c.rank), gram_, off);
    off += c.rank;
  }
  cartan_ = cartan_of_gram(gram_);

  // Grow positive roots height by height using root strings.
  std::vector<RootVec> layer;
  for (int i = 0; i < n_; ++i) layer.push_back(simple(i));
  while (!layer.empty()) {
    for (const auto& b : layer) {
      positive_.push_back(b);
      positive_set_.insert(b);
    }
    std::set<RootVec> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n_; ++i) {
        int p = 0;
        RootVec down = b;
        while (true) {
          down[i] -= 1;
          if (!positive_set_.count(down)) break;
          ++p;
        }
        int q = p - pairing(i, b);
        if (q > 0) {
          RootVec up = b;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  std::stable_sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
}

RootVec RootSystem::simple(int i) const {
  RootVec v(n_, 0);
  v[i] = 1;
  return v;
}

bool RootSystem::is_root(const RootVec& v) const {
  if (is_positive_root(v)) return true;
  RootVec m(v.size());
  for (size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
  return is_positive_root(m);
}

int RootSystem::pairing(int i, const RootVec& beta) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += cartan_[i][j] * beta[j];
  return s;
}

std::vector<int> RootSystem::to_weight(const RootVec& beta) const {
  std::vector<int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = pairing(i, beta);
  return w;
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
  int s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

std::vector<int> RootSystem::support(const RootVec& v) const {
  bool pos = false, neg = false;
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > 0) pos = true;
    if (v[i] < 0) neg = true;
    if (v[i] != 0) s.push_back(i);
  }
  if (pos && neg) throw std::invalid_argument("mixed-sign coefficients in " + root_to_string(v));
  return s;
}

int RootSystem::height(const RootVec& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

bool is_connected(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::set<int> in(nodes.begin(), nodes.end()), seen{nodes[0]};
  std::vector<int> stack{nodes[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : in)
      if (!seen.count(v) && rs.adjacent(u, v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  return seen.size() == in.size();
}

SubdiagramShape classify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes) {
  SubdiagramShape out;
  int r = static_cast<int>(nodes.size());
  if (!is_connected(rs, nodes)) return out;
  std::vector<std::pair<char, int>> candidates;
  candidates.push_back({'A', r});
  if (r >= 2) candidates.push_back({'B', r});
  if (r >= 3) candidates.push_back({'C', r});
  if (r >= 4) candidates.push_back({'D', r});
  if (r >= 6 && r <= 8) candidates.push_back({'E', r});
  if (r == 4) candidates.push_back({'F', 4});
  if (r == 2) candidates.push_back({'G', 2});
  for (auto [t, rk] : candidates) {
    auto std_a = component_cartan(t, rk);
    std::vector<int> perm(r, -1);
    std::vector<bool> used(r, false);
    std::function<void(int)> go = [&](int pos) {
      if (pos == r) {
        std::vector<int> ord(r);
        for (int i = 0; i < r; ++i) ord[i] = nodes[perm[i]];
        out.orderings.push_back(ord);
        return;
      }
      for (int k = 0; k < r; ++k) {
        if (used[k]) continue;
        bool ok = true;
        for (int q = 0; q < pos && ok; ++q) {
          int u = nodes[perm[q]], v = nodes[k];
          ok = rs.cartan(u, v) == std_a[q][pos] && rs.cartan(v, u) == std_a[pos][q];
        }
        if (!ok) continue;
        used[k] = true;
        perm[pos] = k;
        go(pos + 1);
        used[k] = false;
      }
    };
    go(0);
    if (!out.orderings.empty()) {
      out.type = t;
      out.rank = rk;
      return out;
    }
  }
  return out;
}

RootVec indicator(int n, const std::vector<int>& nodes) {
  RootVec v(n, 0);
  for (int i : nodes) v[i] = 1;
  return v;
}

std::string root_to_string(const RootVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0) s += "-";
    else if (!s.empty()) s += "+";
    int a = std::abs(v[i]);
    if (a != 1) s += std::to_string(a);
    s += "α" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace spherica
