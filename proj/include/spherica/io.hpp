#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spherica/admissible.hpp"
#include "spherica/ars.hpp"
#include "spherica/enumerate.hpp"
#include "spherica/ews.hpp"
#include "spherica/luna.hpp"
#include "spherica/report.hpp"

namespace spherica::io {

using json = nlohmann::json;

// Malformed documents. The message starts with the JSON path.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownTypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RootSystem parse_type(const std::string& text);

// Integers beyond 64 bits and all non-integral rationals are strings.
json emit(const Int& x);
json emit(const Rat& x);
Int parse_int(const json& j, const std::string& path);

// Documents carry "kind" and "type"; simple roots are numbered from 1.
json emit(const DynkinDiagram& d);
json emit(const SphericalSystem& s);
json emit(const HomogeneousSphericalDatum& d);
json emit(const AdmissibleMap& m);
json emit(const ExtendedARSSet& e);
json emit(const EWSGenerators& g);

json emit(const ValidationReport& r);
json emit(const ClassificationRecord& r);

// Checks "kind" and returns it.
std::string kind_of(const json& j);

DynkinDiagram parse_diagram(const json& j);
SphericalSystem parse_system(const json& j);
HomogeneousSphericalDatum parse_hsd(const json& j);
AdmissibleMap parse_admissible(const json& j);
// Without "ker_tau" the wonderful extension is used.
ExtendedARSSet parse_ars(const json& j);
EWSGenerators parse_ews(const json& j);

json parse_text(const std::string& text);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

// One line per DSC: No. | D^a | DSC | Admissible map | Active roots.
std::string markdown_table(const std::vector<ClassificationRecord>& records);
std::string roots_text(const std::vector<std::vector<RootVec>>& classes);

}  // namespace spherica::io
