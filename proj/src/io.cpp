#include "spherica/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spherica::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

// Path-aware accessor that rejects unknown keys.
class Obj {
 public:
  Obj(const json& j, std::string path, std::set<std::string> allowed) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) bad(path_, "expected an object");
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) bad(path_, "unknown key \"" + k + "\"");
  }
  bool has(const std::string& k) const { return j_.contains(k); }
  const json& at(const std::string& k) const {
    if (!has(k)) bad(path_, "missing key \"" + k + "\"");
    return j_.at(k);
  }
  std::string sub(const std::string& k) const { return path_ + "." + k; }

 private:
  const json& j_;
  std::string path_;
};

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

long small_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long>();
}

int bounded_int(const json& j, const std::string& path, long lo, long hi) {
  long v = small_int(j, path);
  if (v < lo || v > hi) bad(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const std::string& path, size_t len = SIZE_MAX) {
  array(j, path);
  if (len != SIZE_MAX && j.size() != len) bad(path, "expected " + std::to_string(len) + " entries");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(bounded_int(j[i], path + "[" + std::to_string(i) + "]", -1000000, 1000000));
  return out;
}

Vec vec(const json& j, const std::string& path, size_t len) {
  array(j, path);
  if (j.size() != len) bad(path, "expected " + std::to_string(len) + " entries");
  Vec out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Vec> vecs(const json& j, const std::string& path, size_t len) {
  array(j, path);
  std::vector<Vec> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(vec(j[i], path + "[" + std::to_string(i) + "]", len));
  return out;
}

std::vector<RootVec> roots(const json& j, const std::string& path, size_t n) {
  array(j, path);
  std::vector<RootVec> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], path + "[" + std::to_string(i) + "]", n));
  return out;
}

// Simple-root indices, 1-based in documents.
std::vector<int> simple_list(const json& j, const std::string& path, int n) {
  array(j, path);
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(bounded_int(j[i], path + "[" + std::to_string(i) + "]", 1, n) - 1);
  return out;
}

json simple_json(const std::vector<int>& v) {
  json out = json::array();
  for (int a : v) out.push_back(a + 1);
  return out;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(emit(x));
  return out;
}

json vecs_json(const std::vector<Vec>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(vec_json(x));
  return out;
}

json root_json(const RootSystem& rs, const Vec& weight) {
  json out = json::array();
  auto q = root_coords(rs, weight);
  for (const auto& x : q) out.push_back(emit(x));
  return out;
}

json header(const char* kind, const RootSystem& rs) { return {{"kind", kind}, {"type", rs.diagram().name()}}; }

RootSystem type_of(const Obj& o) {
  const json& t = o.at("type");
  if (!t.is_string()) bad(o.sub("type"), "expected a string");
  return parse_type(t.get<std::string>());
}

size_t central_of(const Obj& o) {
  return o.has("central_rank") ? static_cast<size_t>(bounded_int(o.at("central_rank"), o.sub("central_rank"), 0, 64))
                               : 0;
}

void expect_kind(const json& j, const std::string& kind) {
  if (kind_of(j) != kind) bad("$.kind", "expected \"" + kind + "\"");
}

std::string matrix_text(const std::vector<std::vector<std::string>>& rows) {
  std::string s = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "; ";
    for (size_t j = 0; j < rows[i].size(); ++j) s += (j ? " " : "") + rows[i][j];
  }
  return s + "]";
}

}  // namespace

RootSystem parse_type(const std::string& text) {
  try {
    auto d = DynkinDiagram::parse(text);
    d.check();
    return RootSystem(d);
  } catch (const std::invalid_argument& e) {
    throw UnknownTypeError("unknown Dynkin type \"" + text + "\": " + e.what());
  }
}

json emit(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json emit(const Rat& x) {
  Rat y = x;
  y.canonicalize();
  if (y.get_den() == 1) return emit(Int(y.get_num()));
  return y.get_str();
}

Int parse_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || v.set_str(s, 10) != 0) bad(path, "expected an integer string");
    return v;
  }
  bad(path, "expected an integer");
}

json emit(const DynkinDiagram& d) { return {{"kind", "diagram"}, {"type", d.name()}}; }

json emit(const SphericalSystem& s) {
  json out = header("system", s.rs);
  out["pi_p"] = simple_json(s.pi_p);
  out["sigma"] = json::array();
  for (const auto& w : s.sigma) out["sigma"].push_back(root_json(s.rs, w));
  out["colors"] = vecs_json(s.colors);
  return out;
}

json emit(const HomogeneousSphericalDatum& d) {
  json out = header("hsd", d.rs);
  out["central_rank"] = d.central_rank;
  out["lattice"] = vecs_json(d.lattice.basis());
  out["pi_p"] = simple_json(d.pi_p);
  out["sigma"] = json::array();
  for (const auto& w : d.sigma) out["sigma"].push_back(root_json(d.rs, Vec(w.begin(), w.begin() + d.rs.rank())));
  out["colors"] = vecs_json(d.colors);
  return out;
}

json emit(const AdmissibleMap& m) {
  json out = header("admissible", m.rs);
  out["eta"] = m.eta;
  return out;
}

json emit(const ExtendedARSSet& e) {
  const auto& a = e.ars;
  json out = header("ars", a.rs);
  out["central_rank"] = e.central_rank;
  out["m"] = a.m;
  out["pi"] = simple_json(a.pi);
  size_t k = a.cls.empty() ? 0 : *std::max_element(a.cls.begin(), a.cls.end()) + 1;
  std::vector<std::vector<RootVec>> classes(k);
  for (size_t i = 0; i < a.m.size(); ++i) classes[a.cls[i]].push_back(a.m[i]);
  classes.erase(std::remove_if(classes.begin(), classes.end(), [](const auto& c) { return c.empty(); }),
                classes.end());
  out["classes"] = classes;
  out["ker_tau"] = vecs_json(e.ker_tau.basis());
  return out;
}

json emit(const EWSGenerators& g) {
  json out = header("ews", g.rs);
  out["central_rank"] = g.central_rank;
  out["generators"] = g.character_group.generators();
  out["relations"] = vecs_json(g.character_group.relations());
  out["lambda"] = vecs_json(g.lambda);
  out["chi"] = vecs_json(g.chi);
  out["central"] = vecs_json(g.central);
  return out;
}

json emit(const ValidationReport& r) {
  json axioms = json::array();
  for (const auto& a : r.results()) axioms.push_back({{"axiom", a.axiom}, {"passed", a.passed}, {"witnesses", a.witnesses}});
  return {{"ok", r.ok()}, {"axioms", axioms}};
}

json emit(const ClassificationRecord& r) {
  json dscs = json::array();
  for (const auto& d : r.dscs) {
    json idx = json::array();
    for (size_t i : d.dsc) idx.push_back(i + 1);
    dscs.push_back({{"dsc", idx}, {"eta", d.eta.eta}, {"active_roots", d.classes}});
  }
  return {{"system", emit(r.system)}, {"dscs", dscs}};
}

std::string kind_of(const json& j) {
  if (!j.is_object()) bad("$", "expected an object");
  if (!j.contains("kind")) bad("$", "missing key \"kind\"");
  const auto& k = j.at("kind");
  static const std::set<std::string> kinds = {"diagram", "system", "hsd", "admissible", "ars", "ews"};
  if (!k.is_string() || !kinds.count(k.get<std::string>()))
    bad("$.kind", "expected one of diagram, system, hsd, admissible, ars, ews");
  return k.get<std::string>();
}

DynkinDiagram parse_diagram(const json& j) {
  expect_kind(j, "diagram");
  Obj o(j, "$", {"kind", "type"});
  return type_of(o).diagram();
}

SphericalSystem parse_system(const json& j) {
  expect_kind(j, "system");
  Obj o(j, "$", {"kind", "type", "pi_p", "sigma", "colors"});
  auto rs = type_of(o);
  int n = rs.rank();
  std::vector<int> pi_p = o.has("pi_p") ? simple_list(o.at("pi_p"), o.sub("pi_p"), n) : std::vector<int>{};
  auto sigma = roots(o.at("sigma"), o.sub("sigma"), n);
  std::vector<std::vector<long>> kappa;
  const auto& cj = array(o.at("colors"), o.sub("colors"));
  for (size_t i = 0; i < cj.size(); ++i) {
    auto row = int_list(cj[i], o.sub("colors") + "[" + std::to_string(i) + "]", sigma.size());
    kappa.emplace_back(row.begin(), row.end());
  }
  std::sort(pi_p.begin(), pi_p.end());
  return make_system(rs, sigma, kappa, pi_p);
}

HomogeneousSphericalDatum parse_hsd(const json& j) {
  expect_kind(j, "hsd");
  Obj o(j, "$", {"kind", "type", "central_rank", "lattice", "pi_p", "sigma", "colors"});
  HomogeneousSphericalDatum d;
  d.rs = type_of(o);
  int n = d.rs.rank();
  d.central_rank = central_of(o);
  size_t amb = n + d.central_rank;
  auto gens = vecs(o.at("lattice"), o.sub("lattice"), amb);
  d.lattice = Sublattice::generated_by(gens, amb);
  if (d.lattice.rank() != gens.size()) bad(o.sub("lattice"), "generators are not linearly independent");
  d.pi_p = o.has("pi_p") ? simple_list(o.at("pi_p"), o.sub("pi_p"), n) : std::vector<int>{};
  std::sort(d.pi_p.begin(), d.pi_p.end());
  for (const auto& r : roots(o.at("sigma"), o.sub("sigma"), n)) d.sigma.push_back(weight_of(d.rs, r, d.central_rank));
  // Colors are given on the listed generators; move them to the HNF basis.
  auto given = vecs(o.at("colors"), o.sub("colors"), gens.size());
  std::vector<Vec> change;
  for (const auto& b : d.lattice.basis()) change.push_back(*solve_left(gens, b, amb));
  for (const auto& k : given) {
    Vec v;
    for (const auto& x : change) {
      Int s = 0;
      for (size_t t = 0; t < x.size(); ++t) s += x[t] * k[t];
      v.push_back(s);
    }
    d.colors.push_back(v);
  }
  return d;
}

AdmissibleMap parse_admissible(const json& j) {
  expect_kind(j, "admissible");
  Obj o(j, "$", {"kind", "type", "eta"});
  AdmissibleMap m;
  m.rs = type_of(o);
  size_t n = m.rs.rank();
  const auto& e = array(o.at("eta"), o.sub("eta"));
  if (e.size() != n) bad(o.sub("eta"), "expected " + std::to_string(n) + " rows");
  for (size_t i = 0; i < n; ++i) m.eta.push_back(int_list(e[i], o.sub("eta") + "[" + std::to_string(i) + "]", n));
  return m;
}

ExtendedARSSet parse_ars(const json& j) {
  expect_kind(j, "ars");
  Obj o(j, "$", {"kind", "type", "central_rank", "m", "pi", "classes", "ker_tau"});
  ARSSet a;
  a.rs = type_of(o);
  int n = a.rs.rank();
  size_t c = central_of(o);
  a.m = roots(o.at("m"), o.sub("m"), n);
  a.pi = simple_list(o.at("pi"), o.sub("pi"), n);
  if (a.pi.size() != a.m.size()) bad(o.sub("pi"), "expected one entry per root of m");
  auto classes = array(o.at("classes"), o.sub("classes"));
  a.cls.assign(a.m.size(), SIZE_MAX);
  for (size_t k = 0; k < classes.size(); ++k) {
    std::string p = o.sub("classes") + "[" + std::to_string(k) + "]";
    for (const auto& r : roots(classes[k], p, n)) {
      auto it = std::find(a.m.begin(), a.m.end(), r);
      if (it == a.m.end()) bad(p, "root " + root_to_string(r) + " is not in m");
      size_t i = it - a.m.begin();
      if (a.cls[i] != SIZE_MAX) bad(p, "root " + root_to_string(r) + " lies in two classes");
      a.cls[i] = k;
    }
  }
  for (size_t i = 0; i < a.m.size(); ++i)
    if (a.cls[i] == SIZE_MAX) bad(o.sub("classes"), "root " + root_to_string(a.m[i]) + " lies in no class");
  if (!o.has("ker_tau")) return wonderful_extension(a, c);
  return {a, c, Sublattice::generated_by(vecs(o.at("ker_tau"), o.sub("ker_tau"), n + c), n + c)};
}

EWSGenerators parse_ews(const json& j) {
  expect_kind(j, "ews");
  Obj o(j, "$", {"kind", "type", "central_rank", "generators", "relations", "lambda", "chi", "central"});
  EWSGenerators g;
  g.rs = type_of(o);
  size_t n = g.rs.rank();
  g.central_rank = central_of(o);
  size_t k = bounded_int(o.at("generators"), o.sub("generators"), 0, 4096);
  g.character_group = FgAbelianGroup(k, vecs(o.at("relations"), o.sub("relations"), k));
  g.lambda = vecs(o.at("lambda"), o.sub("lambda"), n);
  g.chi = vecs(o.at("chi"), o.sub("chi"), k);
  if (g.chi.size() != g.lambda.size()) bad(o.sub("chi"), "expected one entry per lambda");
  g.central = o.has("central") ? vecs(o.at("central"), o.sub("central"), k) : std::vector<Vec>{};
  if (g.central.size() != g.central_rank) bad(o.sub("central"), "expected central_rank entries");
  return g;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: not valid JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string roots_text(const std::vector<std::vector<RootVec>>& classes) {
  std::string s;
  for (size_t k = 0; k < classes.size(); ++k) {
    if (k) s += ", ";
    s += "{";
    for (size_t i = 0; i < classes[k].size(); ++i) s += (i ? ", " : "") + root_to_string(classes[k][i]);
    s += "}";
  }
  return s;
}

std::string markdown_table(const std::vector<ClassificationRecord>& records) {
  std::ostringstream out;
  out << "| No. | D^a | DSC | Admissible map | Active roots |\n";
  out << "|---|---|---|---|---|\n";
  for (size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    std::vector<std::vector<std::string>> rows;
    for (const auto& k : rec.system.colors) {
      rows.emplace_back();
      for (const auto& x : k) rows.back().push_back(x.get_str());
    }
    for (size_t d = 0; d < rec.dscs.size(); ++d) {
      const auto& dr = rec.dscs[d];
      std::string dsc;
      for (size_t i = 0; i < dr.dsc.size(); ++i) dsc += (i ? "," : "") + std::to_string(dr.dsc[i] + 1);
      std::vector<std::vector<std::string>> eta;
      for (const auto& row : dr.eta.eta) {
        eta.emplace_back();
        for (int x : row) eta.back().push_back(std::to_string(x));
      }
      out << "| " << (d == 0 ? std::to_string(r + 1) : "") << " | " << (d == 0 ? matrix_text(rows) : "") << " | "
          << dsc << " | " << matrix_text(eta) << " | " << roots_text(dr.classes) << " |\n";
    }
  }
  return out.str();
}

}  // namespace spherica::io
