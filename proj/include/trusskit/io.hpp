#pragma once

// JSON interchange and the named presets understood by the command line.
//
//   heap/truss  {"size": n, "ternary": [n^3 ids], "mult": [n^2 ids], "unit": id}
//   module      {"ring": {"orders": [...], "mult": [...], "one": coords},
//                "module": {"orders": [...], "action": [...]}}
//   group       {"orders": [...]}
//   heap map    {"linear": [[row], ...], "translation": coords}

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trusskit/abelian.hpp"
#include "trusskit/endo_truss.hpp"
#include "trusskit/heap_truss.hpp"
#include "trusskit/ring_module.hpp"

namespace trusskit {

using Json = nlohmann::ordered_json;

Json group_to_json(const AbGroup& g);
AbGroup group_from_json(const Json& j);
Json element_to_json(const GroupElement& a);
Json hom_to_json(const GroupHom& f);
Json heap_morphism_to_json(const HeapMorphism& phi);
Json truss_morphism_to_json(const TrussMorphism& phi);

Json heap_to_json(const FiniteHeap& h);
Json truss_to_json(const FiniteTruss& t);
// Throw InvalidInput on malformed documents.
FiniteHeap heap_from_json(const Json& j);
FiniteTruss truss_from_json(const Json& j);

Json module_to_json(const RModule& m);
RModule module_from_json(const Json& j);

// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

// "2,2" or a path to a {"orders": [...]} file.
AbGroup parse_group_arg(std::string_view arg);

struct Named {
  std::string name;
};
struct NamedHeap : Named {
  FiniteHeap heap;
};
struct NamedTruss : Named {
  FiniteTruss truss;
};
struct NamedModule : Named {
  RModule module;
};

// from-group:G, endo:G, or a JSON file.
NamedHeap load_heap(std::string_view spec, const Limits& limits = {});
// endo:G, zn:n, fp:p, fpxfp:p (rings as trusses), or a JSON file.
NamedTruss load_truss(std::string_view spec, const Limits& limits = {});
// zn:n, fp:p, fpxfp:p (regular modules), example-non-iso:p (both M and N), or
// a JSON file. A trailing "-module" on a preset is accepted.
std::vector<NamedModule> load_modules(std::string_view spec);

}  // namespace trusskit
