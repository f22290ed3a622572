#include "trusskit/io.hpp"

#include <charconv>
#include <fstream>

#include "trusskit/errors.hpp"

namespace trusskit {
namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field \"") + key + "\": " + e.what());
  }
}

std::uint64_t parse_number(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput("bad " + std::string(what) + ": \"" + std::string(text) + "\"");
  }
  return value;
}

std::vector<Id> elements_to_ids(const AbGroup& g, const std::vector<std::vector<std::uint64_t>>& coords) {
  std::vector<Id> out;
  out.reserve(coords.size());
  for (const auto& c : coords) {
    const GroupElement e(c);
    if (!g.contains(e)) throw InvalidInput("element " + to_string(e) + " is not reduced in its group");
    out.push_back(static_cast<Id>(g.index_of(e)));
  }
  return out;
}

// Split "name:arg" and drop an optional "-module" suffix from arg.
std::pair<std::string_view, std::string_view> split_preset(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {spec, {}};
  auto arg = spec.substr(colon + 1);
  constexpr std::string_view suffix = "-module";
  if (arg.size() > suffix.size() && arg.substr(arg.size() - suffix.size()) == suffix) {
    arg.remove_suffix(suffix.size());
  }
  return {spec.substr(0, colon), arg};
}

bool looks_like_file(std::string_view spec) {
  return spec.find('/') != std::string_view::npos || spec.find(".json") != std::string_view::npos;
}

}  // namespace

Json group_to_json(const AbGroup& g) { return Json{{"orders", g.orders()}}; }

AbGroup group_from_json(const Json& j) { return AbGroup(get<std::vector<std::uint64_t>>(j, "orders")); }

Json element_to_json(const GroupElement& a) { return Json(std::vector<Residue>(a.coords().begin(), a.coords().end())); }

Json hom_to_json(const GroupHom& f) {
  Json rows = Json::array();
  const auto cols = f.source().rank();
  for (std::size_t r = 0; r < f.target().rank(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(f.entry(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json heap_morphism_to_json(const HeapMorphism& phi) {
  return Json{{"linear", hom_to_json(phi.linear())}, {"translation", element_to_json(phi.translation())}};
}

Json truss_morphism_to_json(const TrussMorphism& phi) { return Json(phi.map); }

Json heap_to_json(const FiniteHeap& h) {
  return Json{{"size", h.size()}, {"ternary", std::vector<Id>(h.table().begin(), h.table().end())}};
}

Json truss_to_json(const FiniteTruss& t) {
  auto j = heap_to_json(t.heap());
  j["mult"] = std::vector<Id>(t.mult_table().begin(), t.mult_table().end());
  if (t.unit()) j["unit"] = *t.unit();
  return j;
}

FiniteHeap heap_from_json(const Json& j) {
  const auto size = get<Id>(j, "size");
  return FiniteHeap(size, get<std::vector<Id>>(j, "ternary"));
}

FiniteTruss truss_from_json(const Json& j) {
  auto heap = heap_from_json(j);
  std::optional<Id> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = get<Id>(j, "unit");
  return FiniteTruss(std::move(heap), get<std::vector<Id>>(j, "mult"), unit);
}

Json module_to_json(const RModule& m) {
  const auto& r = m.ring();
  if (!r.additive()) throw InvalidInput("module ring has no group presentation");
  return Json{{"ring",
               {{"orders", r.additive()->orders()},
                {"mult", r.mult_table()},
                {"one", element_to_json(r.additive()->element_at(r.one()))}}},
              {"module", {{"orders", m.group().orders()}, {"action", m.action()}}}};
}

RModule module_from_json(const Json& j) {
  const auto ring_j = get<Json>(j, "ring");
  const auto module_j = get<Json>(j, "module");
  const AbGroup additive(get<std::vector<std::uint64_t>>(ring_j, "orders"));
  const auto one = elements_to_ids(additive, {get<std::vector<std::uint64_t>>(ring_j, "one")}).front();
  FiniteRing ring(additive, get<std::vector<Id>>(ring_j, "mult"), one);
  AbGroup group(get<std::vector<std::uint64_t>>(module_j, "orders"));
  return RModule(std::move(ring), std::move(group), get<std::vector<Id>>(module_j, "action"));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

AbGroup parse_group_arg(std::string_view arg) {
  if (looks_like_file(arg)) return group_from_json(read_json_file(std::string(arg)));
  return parse_group_spec(arg);
}

NamedHeap load_heap(std::string_view spec, const Limits& limits) {
  if (looks_like_file(spec)) return {{std::string(spec)}, heap_from_json(read_json_file(std::string(spec)))};
  const auto [kind, arg] = split_preset(spec);
  const auto g = parse_group_spec(arg);
  if (kind == "from-group") return {{std::string(spec)}, heap_from_group(g, limits)};
  if (kind == "endo") return {{std::string(spec)}, build_endo_truss(g, limits).to_truss(limits).heap()};
  throw InvalidInput("unknown heap preset \"" + std::string(spec) + "\"");
}

NamedTruss load_truss(std::string_view spec, const Limits& limits) {
  if (looks_like_file(spec)) return {{std::string(spec)}, truss_from_json(read_json_file(std::string(spec)))};
  const auto [kind, arg] = split_preset(spec);
  if (kind == "endo") return {{std::string(spec)}, build_endo_truss(parse_group_spec(arg), limits).to_truss(limits)};
  const auto n = parse_number(arg, "preset argument");
  if (kind == "zn") return {{std::string(spec)}, ring_as_truss(make_ring_zn(n))};
  if (kind == "fp") return {{std::string(spec)}, ring_as_truss(make_field_fp(n))};
  if (kind == "fpxfp") {
    const auto f = make_field_fp(n);
    return {{std::string(spec)}, ring_as_truss(make_product_ring(f, f))};
  }
  throw InvalidInput("unknown truss preset \"" + std::string(spec) + "\"");
}

std::vector<NamedModule> load_modules(std::string_view spec) {
  if (looks_like_file(spec)) return {{{std::string(spec)}, module_from_json(read_json_file(std::string(spec)))}};
  const auto [kind, arg] = split_preset(spec);
  const auto n = parse_number(arg, "preset argument");
  const std::string name(spec);
  if (kind == "zn") return {{{name}, regular_module(make_ring_zn(n))}};
  if (kind == "fp") return {{{name}, regular_module(make_field_fp(n))}};
  if (kind == "fpxfp") {
    const auto f = make_field_fp(n);
    return {{{name}, regular_module(make_product_ring(f, f))}};
  }
  if (kind == "example-non-iso") {
    auto ex = make_non_iso_example(n);
    return {{{name + "/M"}, std::move(ex.m)}, {{name + "/N"}, std::move(ex.n)}};
  }
  throw InvalidInput("unknown module preset \"" + std::string(spec) + "\"");
}

}  // namespace trusskit
