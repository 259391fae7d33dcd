#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "spherica/io.hpp"

using namespace spherica;
using io::json;

namespace {

// Validation or conversion failure: exit 1.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string what;  // kind or conversion
  std::string input, type, matrix, dsc, format;
  bool cuspidal = false, parallel = false;
  int rank_bound = default_rank_bound();
};

std::string slurp(const std::string& where) {
  if (where == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!where.empty() && (where[0] == '{' || where[0] == '[')) return where;
  std::ifstream f(where);
  if (!f) throw io::SchemaError("cannot read input file " + where);
  return {std::istreambuf_iterator<char>(f), {}};
}

json load(const Job& job, const std::string& kind) {
  if (!job.input.empty()) return io::parse_text(slurp(job.input));
  if (job.type.empty()) throw io::SchemaError("$: need --input, or --type with --matrix");
  if (kind == "diagram") return {{"kind", "diagram"}, {"type", job.type}};
  if (job.matrix.empty()) throw io::SchemaError("$: need --matrix for " + kind);
  json m = io::parse_text(job.matrix);
  if (kind == "admissible") return {{"kind", "admissible"}, {"type", job.type}, {"eta", m}};
  if (kind == "system") {
    // Cuspidal shorthand: Sigma = Pi, colors given by --matrix.
    auto rs = io::parse_type(job.type);
    json sigma = json::array();
    for (int i = 0; i < rs.rank(); ++i) sigma.push_back(rs.simple(i));
    return {{"kind", "system"}, {"type", job.type}, {"sigma", sigma}, {"colors", m}};
  }
  throw io::SchemaError("$: --matrix is only accepted for admissible and system");
}

std::vector<size_t> parse_dsc(const std::string& text, size_t colors) {
  if (text.empty()) throw io::SchemaError("--dsc: required for this conversion");
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
    }
    if (pos != tok.size() || v < 1 || static_cast<size_t>(v) > colors)
      throw io::SchemaError("--dsc: \"" + tok + "\" is not a color number in 1.." + std::to_string(colors));
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void print(const json& j) { std::cout << io::dump(j); }

int report(const ValidationReport& r, const Job& job) {
  if (job.format == "json") print(io::emit(r));
  else std::cout << r.text() << (r.ok() ? "all axioms pass\n" : "");
  return r.ok() ? 0 : 1;
}

int run_check(const Job& job) {
  json doc = load(job, job.what);
  std::string kind = io::kind_of(doc);
  if (kind != job.what) throw io::SchemaError("$.kind: document is \"" + kind + "\", expected \"" + job.what + "\"");
  if (kind == "diagram") {
    io::parse_diagram(doc);
    ValidationReport r;
    r.check("diagram");
    return report(r, job);
  }
  if (kind == "system") return report(validate_hsd(io::parse_system(doc)), job);
  if (kind == "hsd") return report(validate_hsd(io::parse_hsd(doc)), job);
  if (kind == "admissible") return report(validate_admissible(io::parse_admissible(doc)), job);
  if (kind == "ars") return report(validate_extended(io::parse_ars(doc)), job);
  auto g = io::parse_ews(doc);
  ValidationReport r;
  r.check("free");
  try {
    auto inv = invariants_from_ews(g);
    for (const auto& a : validate_hsd(inv.datum()).results())
      for (const auto& w : a.witnesses) r.fail(a.axiom, w);
  } catch (const std::invalid_argument& e) {
    r.fail("free", e.what());
  }
  return report(r, job);
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const io::SchemaError&) {
    throw;
  } catch (const io::UnknownTypeError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw Invalid(e.what());
  }
}

int run_convert(const Job& job) {
  const std::string& c = job.what;
  auto from = c.substr(0, c.find("-to-"));
  if (c.find("-to-") == std::string::npos) throw io::SchemaError("unknown conversion \"" + c + "\"");
  json doc = load(job, from);
  if (io::kind_of(doc) != from) throw io::SchemaError("$.kind: expected \"" + from + "\" for " + c);

  if (c == "system-to-admissible" || c == "system-to-ars") {
    auto s = io::parse_system(doc);
    auto dsc = parse_dsc(job.dsc, s.colors.size());
    auto eta = guarded([&] { return admissible_from_system(s, dsc); });
    if (c == "system-to-admissible") print(io::emit(eta));
    else print(io::emit(normalize(wonderful_extension(ars_from_admissible(eta).maximal()))));
    return 0;
  }
  if (c == "admissible-to-system" || c == "admissible-to-ars") {
    auto m = io::parse_admissible(doc);
    auto rep = validate_admissible(m);
    if (!rep.ok()) return report(rep, job);
    if (c == "admissible-to-system") print(io::emit(spherical_system_of_admissible(m).system));
    else print(io::emit(wonderful_extension(ars_from_admissible(m).maximal())));
    return 0;
  }
  if (c == "ars-to-admissible" || c == "ars-to-hsd" || c == "ars-to-ews") {
    auto e = io::parse_ars(doc);
    auto rep = validate_extended(e);
    if (!rep.ok()) return report(rep, job);
    if (c == "ars-to-admissible") print(io::emit(guarded([&] { return admissible_from_ars(e); })));
    else if (c == "ars-to-hsd") print(io::emit(guarded([&] { return hsd_from_ars(e); })));
    else print(io::emit(guarded([&] { return ews_generators_from_ars(e); })));
    return 0;
  }
  if (c == "hsd-to-ars" || c == "hsd-to-ews" || c == "hsd-to-system") {
    auto d = io::parse_hsd(doc);
    auto rep = validate_hsd(d);
    if (!rep.ok()) return report(rep, job);
    if (c == "hsd-to-system") print(io::emit(system_of(d)));
    else if (c == "hsd-to-ews") print(io::emit(ews_from_hsd(d)));
    else {
      auto dsc = parse_dsc(job.dsc, full_color_set(d).colors.size());
      print(io::emit(guarded([&] { return ars_from_hsd(d, dsc); })));
    }
    return 0;
  }
  if (c == "system-to-hsd") {
    print(io::emit(io::parse_system(doc).datum()));
    return 0;
  }
  if (c == "ews-to-hsd") {
    print(io::emit(guarded([&] { return invariants_from_ews(io::parse_ews(doc)).datum(); })));
    return 0;
  }
  throw io::SchemaError("unknown conversion \"" + c + "\"");
}

std::vector<ClassificationRecord> records(const Job& job, bool cuspidal) {
  if (job.type.empty()) throw io::SchemaError("--type: required");
  auto rs = io::parse_type(job.type);
  EnumerateOptions opt;
  opt.rank_bound = job.rank_bound;
  opt.parallel = job.parallel;
  return cuspidal ? enumerate_cuspidal_systems(rs, opt) : enumerate_systems(rs, opt);
}

int run_enumerate(const Job& job, bool table) {
  auto recs = records(job, job.cuspidal || table);
  std::string fmt = job.format.empty() ? (table ? "table" : "json") : job.format;
  if (fmt == "table") {
    std::cout << io::markdown_table(recs);
  } else if (fmt == "json") {
    json out = json::array();
    for (const auto& r : recs) out.push_back(io::emit(r));
    print(out);
  } else {
    size_t n = 0;
    for (const auto& r : recs) n += r.dscs.size();
    std::cout << recs.size() << " systems, " << n << " admissible maps\n";
    for (size_t i = 0; i < recs.size(); ++i)
      std::cout << i + 1 << ": " << recs[i].system.colors.size() << " colors, " << recs[i].dscs.size() << " DSC\n";
  }
  return 0;
}

const char* type_name(ColorType t) { return t == ColorType::a ? "a" : t == ColorType::a_prime ? "a'" : "b"; }

int run_ews(const Job& job) {
  if (job.input.empty()) throw io::SchemaError("--input: required");
  json doc = io::parse_text(slurp(job.input));
  std::string kind = io::kind_of(doc);
  EWSGenerators g;
  if (kind == "ars") {
    auto e = io::parse_ars(doc);
    auto rep = validate_extended(e);
    if (!rep.ok()) return report(rep, job);
    g = ews_generators_from_ars(e);
  } else if (kind == "hsd" || kind == "system") {
    auto d = kind == "hsd" ? io::parse_hsd(doc) : io::parse_system(doc).datum();
    auto rep = validate_hsd(d);
    if (!rep.ok()) return report(rep, job);
    g = ews_from_hsd(d);
  } else if (kind == "ews") {
    g = io::parse_ews(doc);
  } else {
    throw io::SchemaError("$.kind: expected ars, hsd, system or ews");
  }
  auto inv = guarded([&] { return invariants_from_ews(g); });
  if (job.format == "text") {
    std::cout << "X(H) = " << g.character_group.describe() << "\n";
    for (size_t i = 0; i < inv.colors.size(); ++i) {
      const auto& c = inv.colors[i];
      std::cout << "D" << i + 1 << " (" << type_name(c.type) << "): lambda = " << vec_to_string(c.lambda)
                << ", chi = " << vec_to_string(c.chi) << ", kappa = " << vec_to_string(c.kappa) << "\n";
    }
    return 0;
  }
  json colors = json::array();
  for (const auto& c : inv.colors) {
    json simple = json::array();
    for (int a : c.simple) simple.push_back(a + 1);
    json lam = json::array(), chi = json::array(), kap = json::array();
    for (const auto& x : c.lambda) lam.push_back(io::emit(x));
    for (const auto& x : c.chi) chi.push_back(io::emit(x));
    for (const auto& x : c.kappa) kap.push_back(io::emit(x));
    colors.push_back({{"type", type_name(c.type)}, {"simple", simple}, {"lambda", lam}, {"chi", chi}, {"kappa", kap}});
  }
  json torsion = json::array();
  for (const auto& t : g.character_group.torsion()) torsion.push_back(io::emit(t));
  print({{"generators", io::emit(g)},
         {"character_group", {{"torsion", torsion}, {"free_rank", g.character_group.free_rank()}}},
         {"colors", colors},
         {"datum", io::emit(inv.datum())}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly solvable spherical subgroups: validation, conversion, enumeration"};
  app.require_subcommand(1);
  Job job;
  job.format = "";

  auto common = [&](CLI::App* s) {
    s->add_option("--input", job.input, "JSON file, '-' for stdin, or an inline document");
    s->add_option("--type", job.type, "Dynkin type, e.g. A3 or A1xA1");
    s->add_option("--format", job.format, "json, table or text")->check(CLI::IsMember({"json", "table", "text"}));
  };

  auto* check = app.add_subcommand("check", "Validate a document against its axioms");
  check->add_option("kind", job.what, "diagram, system, hsd, admissible, ars or ews")
      ->required()
      ->check(CLI::IsMember({"diagram", "system", "hsd", "admissible", "ars", "ews"}));
  common(check);
  check->add_option("--matrix", job.matrix, "eta (admissible) or kappa rows (cuspidal system), as JSON");

  auto* convert = app.add_subcommand("convert", "Convert between classifications");
  convert->add_option("conversion", job.what, "e.g. system-to-admissible, admissible-to-ars, hsd-to-ars")->required();
  common(convert);
  convert->add_option("--matrix", job.matrix, "eta (admissible) or kappa rows (cuspidal system), as JSON");
  convert->add_option("--dsc", job.dsc, "distinguished subset of colors, 1-based, e.g. 1,4");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate strongly solvable spherical systems");
  common(enumerate);
  enumerate->add_flag("--cuspidal", job.cuspidal, "only Sigma = Pi");

  auto* table = app.add_subcommand("emit-table", "Markdown table of the cuspidal systems of a type");
  common(table);

  auto* ews = app.add_subcommand("ews", "Extended weight semigroup of an ARS-set, datum or generator list");
  common(ews);

  for (auto* s : {enumerate, table}) {
    s->add_option("--rank-bound", job.rank_bound, "largest rank to enumerate");
    s->add_flag("--parallel", job.parallel, "split the search over threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(job);
    if (*convert) return run_convert(job);
    if (*enumerate) return run_enumerate(job, false);
    if (*table) return run_enumerate(job, true);
    if (*ews) return run_ews(job);
  } catch (const io::UnknownTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io::SchemaError& e) {
    std::cerr << "error: schema violation: " << e.what() << "\n";
    return 2;
  } catch (const RankBoundError& e) {
    std::cerr << "error: rank over bound: " << e.what() << "\n";
    return 2;
  } catch (const Invalid& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
